#pragma once

#include <mpfr.h>

#include <string>

#include "qsc/rational.hpp"

namespace qsc {

// RAII wrapper around an mpfr_t with explicit precision. All operations
// round to nearest; binary operations take the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_long(long v, long precision_bits);
    static BigFloat from_double(double v, long precision_bits);
    static BigFloat from_rational(const Rational& v, long precision_bits);
    static BigFloat pi(long precision_bits);

    long precision() const { return mpfr_get_prec(v_); }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    BigFloat abs() const;
    BigFloat cos() const;
    BigFloat sin() const;
    // Nearest integer (ties away from zero, mpfr_round).
    BigFloat rounded() const;
    mpz_class to_integer() const; // value must already be an integer

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int significant_digits = 25) const;

private:
    mpfr_t v_;
};

// Complex number over BigFloat.
class BigComplex {
public:
    explicit BigComplex(long precision_bits = 128)
        : re_(precision_bits), im_(precision_bits) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

    static BigComplex from_rational(const Rational& v, long precision_bits);
    // exp(i * theta)
    static BigComplex unit_circle(const BigFloat& theta);

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    long precision() const { return re_.precision(); }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }

    BigComplex& operator+=(const BigComplex& o) { *this = *this + o; return *this; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigComplex inverse() const;
    BigComplex pow(long e) const; // negative exponents allowed

    BigComplex make_constant(const Rational& c) const {
        return from_rational(c, precision());
    }

    // max(|re - o.re|, |im - o.im|)
    BigFloat distance(const BigComplex& o) const;
    BigFloat magnitude_upper() const; // |re| + |im|, cheap modulus bound

    std::string str(int significant_digits = 25) const;

private:
    BigFloat re_, im_;
};

} // namespace qsc
