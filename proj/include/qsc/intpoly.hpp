#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// Used for cyclotomic polynomials and the Poincare polynomial.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly constant(mpz_class c);
    // c * x^deg
    static IntPoly monomial(mpz_class c, int deg);
    // x^n - 1
    static IntPoly x_power_minus_one(int n);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpz_class coefficient(int i) const;
    const std::vector<mpz_class>& coefficients() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    // Quotient of an exact division; throws Error if a remainder is left or a
    // coefficient division fails (all our divisors are monic up to sign).
    IntPoly exact_divide(const IntPoly& divisor) const;

    mpz_class eval(const mpz_class& x) const;

    // Ascending-power rendering, e.g. "1 + t^2 + 2*t^4".
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpz_class> c_; // c_[i] is the coefficient of x^i; no trailing zeros
};

} // namespace qsc
