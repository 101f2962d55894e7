#include "qsc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsc {

Monomial Monomial::variable(int r, int i) {
    if (i < 1 || i > r) throw IndexError("variable index out of range");
    Monomial m = unit(r);
    m.exponents[i - 1] = 1;
    return m;
}

bool Monomial::is_unit() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

int Monomial::weighted_degree() const {
    int d = 0;
    for (int i = 0; i < num_vars(); ++i) d += (i + 1) * exponents[i];
    return d;
}

int Monomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

WeightedPoly::WeightedPoly(int ambient_r) : ambient_r_(ambient_r) {
    if (ambient_r < 1) throw DimensionError("ambient_r must be positive");
}

WeightedPoly WeightedPoly::constant(int r, const Rational& c) {
    WeightedPoly p(r);
    p.add_term(Monomial::unit(r), c);
    return p;
}

WeightedPoly WeightedPoly::variable(int r, int i) {
    WeightedPoly p(r);
    p.add_term(Monomial::variable(r, i), Rational(1));
    return p;
}

WeightedPoly WeightedPoly::from_term(int r, const Monomial& m, const Rational& c) {
    WeightedPoly p(r);
    p.add_term(m, c);
    return p;
}

Rational WeightedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeightedPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.num_vars() != ambient_r_) throw DimensionError("monomial length does not match ambient_r");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WeightedPoly::check_same_ring(const WeightedPoly& o) const {
    if (ambient_r_ != o.ambient_r_)
        throw DimensionError("polynomials live in different ambient rings (" +
                             std::to_string(ambient_r_) + " vs " + std::to_string(o.ambient_r_) +
                             " variables)");
}

WeightedPoly WeightedPoly::operator-() const {
    WeightedPoly out(ambient_r_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
    a.check_same_ring(b);
    WeightedPoly out(a.ambient_r_);
    Monomial prod;
    prod.exponents.resize(a.ambient_r_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.ambient_r_; ++i)
                prod.exponents[i] = ma.exponents[i] + mb.exponents[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

WeightedPoly WeightedPoly::scaled(const Rational& c) const {
    WeightedPoly out(ambient_r_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

WeightedPoly WeightedPoly::pow(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    WeightedPoly acc = constant(ambient_r_, Rational(1));
    WeightedPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

WeightedPoly WeightedPoly::partial_derivative(int i) const {
    if (i < 1 || i > ambient_r_) throw IndexError("derivative index out of range");
    WeightedPoly out(ambient_r_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponents[i - 1];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exponents[i - 1] = e - 1;
        out.add_term(dm, c * Rational(e));
    }
    return out;
}

WeightedDegree WeightedPoly::weighted_degree() const {
    WeightedDegree report;
    if (terms_.empty()) return report; // Kind::zero
    const int d = terms_.begin()->first.weighted_degree();
    // Canonical order is graded, so first and last terms bound the degrees.
    if (terms_.rbegin()->first.weighted_degree() == d) {
        report.kind = WeightedDegree::Kind::homogeneous;
        report.value = d;
    } else {
        report.kind = WeightedDegree::Kind::mixed;
    }
    return report;
}

int WeightedPoly::max_weighted_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.weighted_degree();
}

std::string WeightedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (m.is_unit()) {
            os << mag.str();
        } else {
            bool leading = true;
            if (!mag.is_one()) {
                os << mag.str();
                leading = false;
            }
            for (int i = 0; i < ambient_r_; ++i) {
                const int e = m.exponents[i];
                if (e == 0) continue;
                if (!leading) os << "*";
                leading = false;
                os << "X" << (i + 1);
                if (e > 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

namespace {

// det over rows [0, popcount(mask)) and the column set encoded by mask.
WeightedPoly det_minor(const std::vector<std::vector<WeightedPoly>>& m, unsigned mask,
                       std::map<unsigned, WeightedPoly>& memo, int r) {
    if (mask == 0) return WeightedPoly::constant(r, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    const int row = __builtin_popcount(mask) - 1;
    WeightedPoly acc(r);
    int pos = 0;
    for (int col = 0; col < static_cast<int>(m.size()); ++col) {
        if (!(mask & (1u << col))) continue;
        if (!m[row][col].is_zero()) {
            WeightedPoly sub = det_minor(m, mask & ~(1u << col), memo, r);
            WeightedPoly contrib = m[row][col] * sub;
            if ((row + pos) % 2 == 0)
                acc += contrib;
            else
                acc -= contrib;
        }
        ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

WeightedPoly det_poly_matrix(const std::vector<std::vector<WeightedPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw ShapeError("empty matrix");
    if (n > 31) throw ShapeError("matrix too large");
    const int r = m[0][0].ambient_r();
    for (const auto& row : m) {
        if (row.size() != n) throw ShapeError("matrix is not square");
        for (const auto& entry : row)
            if (entry.ambient_r() != r) throw DimensionError("matrix entries in different rings");
    }
    std::map<unsigned, WeightedPoly> memo;
    return det_minor(m, (1u << n) - 1, memo, r);
}

namespace {

void enumerate_rec(int r, int var, int remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
    if (var == r) {
        if (remaining == 0) out.emplace_back(exps);
        return;
    }
    const int weight = var + 1;
    for (int e = remaining / weight; e >= 0; --e) {
        exps[var] = e;
        enumerate_rec(r, var + 1, remaining - weight * e, exps, out);
    }
    exps[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_weighted_degree(int r, int degree) {
    if (r < 1) throw DimensionError("ambient_r must be positive");
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> exps(r, 0);
    enumerate_rec(r, 0, degree, exps, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return MonomialOrder()(a, b); });
    return out;
}

WeightedPoly random_homogeneous_poly(int r, int degree, std::mt19937_64& rng) {
    if (degree < 0) throw DegreeError("random polynomial needs degree >= 0");
    const auto basis = monomials_of_weighted_degree(r, degree);
    if (basis.empty()) throw DegreeError("no monomials of the requested degree");
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> keep(0, 2);
    WeightedPoly p(r);
    for (const auto& m : basis) {
        if (keep(rng) == 0) continue; // drop roughly a third of the support
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    if (p.is_zero()) {
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        p.add_term(basis[pick(rng)], Rational(1 + (coeff(rng) & 3)));
    }
    return p;
}

} // namespace qsc
