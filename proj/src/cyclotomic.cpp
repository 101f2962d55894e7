#include "qsc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qsc {

namespace {

std::mutex g_cyclo_mutex;

IntPoly cyclotomic_polynomial_locked(long n, std::map<long, IntPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    IntPoly result = IntPoly::x_power_minus_one(static_cast<int>(n));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        result = result.exact_divide(cyclotomic_polynomial_locked(d, memo));
    }
    memo.emplace(n, result);
    return result;
}

} // namespace

IntPoly cyclotomic_polynomial(long n) {
    if (n < 1) throw Error("cyclotomic index must be positive");
    static std::map<long, IntPoly> memo;
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_polynomial_locked(n, memo);
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

CyclotomicField::CyclotomicField(long n) : n_(n) {
    modulus_ = cyclotomic_polynomial(n);
    phi_ = modulus_.degree();

    // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}); the
    // modulus is monic with integer coefficients.
    const long table_size = std::max(n_, 2 * phi_ - 1);
    power_table_.reserve(table_size);
    std::vector<Rational> row(phi_, Rational(0));
    row[0] = Rational(1);
    power_table_.push_back(row);
    for (long m = 1; m < table_size; ++m) {
        std::vector<Rational> next(phi_, Rational(0));
        const std::vector<Rational>& prev = power_table_.back();
        // multiply by zeta: shift, then fold the zeta^phi overflow
        const Rational top = prev[phi_ - 1];
        for (long i = phi_ - 1; i >= 1; --i) next[i] = prev[i - 1];
        next[0] = Rational(0);
        if (!top.is_zero()) {
            for (long i = 0; i < phi_; ++i)
                next[i] -= top * Rational(modulus_.coefficient(static_cast<int>(i)));
        }
        power_table_.push_back(std::move(next));
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(n));
        it = cache.emplace(n, std::move(field)).first;
    }
    return it->second;
}

CyclotomicElement CyclotomicField::zero() const {
    return CyclotomicElement(shared_from_this(), std::vector<Rational>(phi_, Rational(0)));
}

CyclotomicElement CyclotomicField::one() const { return constant(Rational(1)); }

CyclotomicElement CyclotomicField::constant(const Rational& c) const {
    std::vector<Rational> v(phi_, Rational(0));
    v[0] = c;
    return CyclotomicElement(shared_from_this(), std::move(v));
}

CyclotomicElement CyclotomicField::zeta_power(long m) const {
    m %= n_;
    if (m < 0) m += n_;
    return CyclotomicElement(shared_from_this(), power_table_[m]);
}

std::vector<Rational> CyclotomicField::reduce(const std::vector<Rational>& raw) const {
    std::vector<Rational> out(phi_, Rational(0));
    for (std::size_t m = 0; m < raw.size(); ++m) {
        if (raw[m].is_zero()) continue;
        if (static_cast<long>(m) < phi_) {
            out[m] += raw[m];
        } else {
            if (static_cast<long>(m) >= static_cast<long>(power_table_.size()))
                throw Error("reduction exponent exceeds the precomputed table");
            const auto& row = power_table_[m];
            for (long i = 0; i < phi_; ++i) out[i] += raw[m] * row[i];
        }
    }
    return out;
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        if (!coeff_[i].is_zero()) return false;
    return true;
}

Rational CyclotomicElement::rational_value() const {
    if (!is_rational())
        throw RationalityError("cyclotomic value is not rational: " + str());
    return coeff_.empty() ? Rational(0) : coeff_[0];
}

namespace {

void require_same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.field() != b.field()) throw Error("cyclotomic elements belong to different fields");
}

} // namespace

CyclotomicElement CyclotomicElement::operator-() const {
    std::vector<Rational> v(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) v[i] = -coeff_[i];
    return CyclotomicElement(field_, std::move(v));
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    require_same_field(*this, o);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    require_same_field(*this, o);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    require_same_field(a, b);
    const auto& ka = a.coefficients();
    const auto& kb = b.coefficients();
    std::vector<Rational> conv(ka.size() + kb.size() - 1, Rational(0));
    for (std::size_t i = 0; i < ka.size(); ++i) {
        if (ka[i].is_zero()) continue;
        for (std::size_t j = 0; j < kb.size(); ++j) {
            if (kb[j].is_zero()) continue;
            conv[i + j] += ka[i] * kb[j];
        }
    }
    return CyclotomicElement(a.field(), a.field()->reduce(conv));
}

namespace {

// polynomial helpers over Rational coefficient vectors, little-endian
int poly_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

std::vector<Rational> poly_scale(const std::vector<Rational>& p, const Rational& c) {
    std::vector<Rational> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * c;
    return out;
}

// a -= q * x^shift * b
void poly_submul(std::vector<Rational>& a, const Rational& q, int shift,
                 const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].is_zero()) continue;
        const std::size_t idx = i + shift;
        if (idx >= a.size()) a.resize(idx + 1, Rational(0));
        a[idx] -= q * b[i];
    }
}

} // namespace

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) throw DivisionError("inverse of zero cyclotomic element");
    const long phi = field_->degree();

    // extended Euclid: r0 = modulus, r1 = this; maintain t with t * this = r (mod modulus)
    std::vector<Rational> r0(phi + 1);
    for (long i = 0; i <= phi; ++i) r0[i] = Rational(field_->modulus().coefficient(static_cast<int>(i)));
    std::vector<Rational> r1 = coeff_;
    std::vector<Rational> t0(1, Rational(0));
    std::vector<Rational> t1(1, Rational(1));

    while (true) {
        const int d1 = poly_degree(r1);
        if (d1 < 0) throw DivisionError("element is not invertible"); // cannot happen: modulus irreducible
        if (d1 == 0) {
            // gcd is the nonzero constant r1[0]; scale t1 to make it 1
            auto inv = poly_scale(t1, r1[0].inverse());
            inv.resize(phi, Rational(0));
            return CyclotomicElement(field_, field_->reduce(inv));
        }
        int d0 = poly_degree(r0);
        while (d0 >= d1) {
            const Rational q = r0[d0] / r1[d1];
            poly_submul(r0, q, d0 - d1, r1);
            poly_submul(t0, q, d0 - d1, t1);
            d0 = poly_degree(r0);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
}

CyclotomicElement CyclotomicElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicElement acc = field_->one();
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
    require_same_field(*this, o);
    return coeff_ == o.coeff_;
}

std::string CyclotomicElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeff_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeff_[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace qsc
