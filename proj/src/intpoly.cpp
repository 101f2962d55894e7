#include "qsc/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qsc {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(mpz_class c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, mpz_class(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::x_power_minus_one(int n) {
    IntPoly p;
    p.c_.assign(n + 1, mpz_class(0));
    p.c_[0] = -1;
    p.c_[n] = 1;
    return p;
}

mpz_class IntPoly::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    out.trim();
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] -= o.c_[i];
    out.trim();
    return out;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

IntPoly IntPoly::exact_divide(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) throw Error("inexact polynomial division: degree too low");

    std::vector<mpz_class> rem = c_;
    const int dq = degree() - divisor.degree();
    std::vector<mpz_class> quot(dq + 1, mpz_class(0));
    const mpz_class& lead = divisor.c_.back();

    for (int i = dq; i >= 0; --i) {
        mpz_class top = rem[i + divisor.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw Error("inexact polynomial division: leading coefficient");
        mpz_class q = top / lead;
        quot[i] = q;
        for (int j = 0; j <= divisor.degree(); ++j) rem[i + j] -= q * divisor.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw Error("inexact polynomial division: nonzero remainder");
    return IntPoly(std::move(quot));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class mag = abs(c_[i]);
        if (first) {
            if (c_[i] < 0) os << "-";
            first = false;
        } else {
            os << (c_[i] < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace qsc
