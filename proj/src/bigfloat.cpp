#include "qsc/bigfloat.hpp"

#include <algorithm>

#include "qsc/errors.hpp"

namespace qsc {

BigFloat::BigFloat(long precision_bits) {
    if (precision_bits < MPFR_PREC_MIN) precision_bits = MPFR_PREC_MIN;
    mpfr_init2(v_, precision_bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long v, long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_si(out.v_, v, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_double(double v, long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_d(out.v_, v, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_rational(const Rational& v, long precision_bits) {
    BigFloat out(precision_bits);
    mpq_class q(v.numerator(), v.denominator());
    mpfr_set_q(out.v_, q.get_mpq_t(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DivisionError("floating-point division by zero");
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos() const {
    BigFloat out(precision());
    mpfr_cos(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sin() const {
    BigFloat out(precision());
    mpfr_sin(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::rounded() const {
    BigFloat out(precision());
    mpfr_round(out.v_, v_);
    return out;
}

mpz_class BigFloat::to_integer() const {
    if (!is_finite()) throw PrecisionError("non-finite float cannot become an integer");
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDN);
    return out;
}

std::string BigFloat::str(int significant_digits) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", significant_digits, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigComplex BigComplex::from_rational(const Rational& v, long precision_bits) {
    return BigComplex(BigFloat::from_rational(v, precision_bits), BigFloat(precision_bits));
}

BigComplex BigComplex::unit_circle(const BigFloat& theta) {
    return BigComplex(theta.cos(), theta.sin());
}

BigComplex BigComplex::inverse() const {
    BigFloat norm = re_ * re_ + im_ * im_;
    if (norm.is_zero()) throw DivisionError("inverse of zero complex value");
    return BigComplex(re_ / norm, -(im_ / norm));
}

BigComplex BigComplex::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BigComplex acc = make_constant(Rational(1));
    BigComplex base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

BigFloat BigComplex::distance(const BigComplex& o) const {
    BigFloat dr = (re_ - o.re_).abs();
    BigFloat di = (im_ - o.im_).abs();
    return dr < di ? di : dr;
}

BigFloat BigComplex::magnitude_upper() const { return re_.abs() + im_.abs(); }

std::string BigComplex::str(int significant_digits) const {
    return "(" + re_.str(significant_digits) + ", " + im_.str(significant_digits) + ")";
}

} // namespace qsc
