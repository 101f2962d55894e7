#include "qsc/rational.hpp"

#include <ostream>

namespace qsc {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational out;
    out.v_ = ::abs(v_);
    return out;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionError("inverse of zero");
    Rational out;
    out.v_ = 1 / v_;
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace qsc
