#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qsc/intpoly.hpp"
#include "qsc/rational.hpp"

namespace qsc {

// n-th cyclotomic polynomial, by exact division of x^n - 1 by the lower
// cyclotomic factors. Memoized.
IntPoly cyclotomic_polynomial(long n);

long euler_phi(long n);

class CyclotomicElement;

// The field Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1} modulo
// the n-th cyclotomic polynomial. Immutable once constructed; elements hold a
// shared pointer to their field.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
public:
    static std::shared_ptr<const CyclotomicField> get(long n); // cached

    long conductor() const { return n_; }
    long degree() const { return phi_; }
    const IntPoly& modulus() const { return modulus_; }

    CyclotomicElement zero() const;
    CyclotomicElement one() const;
    CyclotomicElement constant(const Rational& c) const;
    CyclotomicElement zeta_power(long m) const; // zeta^m reduced, any integer m

    // Reduce a coefficient vector of arbitrary length modulo the cyclotomic
    // polynomial.
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const;

private:
    explicit CyclotomicField(long n);

    long n_;
    long phi_;
    IntPoly modulus_;
    // power_table_[m] holds zeta^m in the power basis, for m up to
    // max(n-1, 2*phi-2); covers both root exponents and product folding.
    std::vector<std::vector<Rational>> power_table_;
};

// Element of Q(zeta_n). Arithmetic requires both operands to belong to the
// same field object.
class CyclotomicElement {
public:
    CyclotomicElement() = default; // empty element; usable only as a target

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const;
    // True when only the constant coordinate is (possibly) nonzero.
    bool is_rational() const;
    // The constant coordinate; throws RationalityError unless is_rational().
    Rational rational_value() const;

    CyclotomicElement operator-() const;
    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { a += b; return a; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { a -= b; return a; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

    // Multiplicative inverse by the extended Euclidean algorithm against the
    // cyclotomic modulus. Throws DivisionError on zero.
    CyclotomicElement inverse() const;
    CyclotomicElement pow(long e) const; // negative exponents allowed

    CyclotomicElement make_constant(const Rational& c) const { return field_->constant(c); }

    bool operator==(const CyclotomicElement& o) const;
    bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }

    // Power-basis rendering in the variable z, e.g. "z^3 - 1/2*z + 1".
    std::string str() const;

private:
    friend class CyclotomicField;
    CyclotomicElement(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c)
        : field_(std::move(f)), coeff_(std::move(c)) {}

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeff_;
};

} // namespace qsc
