#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/rational.hpp"

namespace qsc {

// Exponent vector for X_1..X_r. X_i carries weight i, so the weighted degree
// of X^e is sum over i of i * e_i.
struct Monomial {
    std::vector<int> exponents; // exponents[i] is the power of X_{i+1}

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial unit(int r) { return Monomial(std::vector<int>(r, 0)); }
    // X_i as a monomial, i is 1-based.
    static Monomial variable(int r, int i);

    int num_vars() const { return static_cast<int>(exponents.size()); }
    bool is_unit() const;
    int weighted_degree() const;
    int total_degree() const;

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator!=(const Monomial& o) const { return exponents != o.exponents; }
};

// Canonical term order: higher weighted degree first, then descending
// lexicographic on exponents. Map iteration order doubles as print order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.weighted_degree();
        const int db = b.weighted_degree();
        if (da != db) return da > db;
        return a.exponents > b.exponents;
    }
};

// Weighted-degree report. The zero polynomial is its own state (the "-inf"
// sentinel); polynomials mixing degrees are reported as such, not errored.
struct WeightedDegree {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    int value = 0; // meaningful only when kind == homogeneous

    bool is_homogeneous() const { return kind == Kind::homogeneous; }
    bool is_homogeneous_of(int d) const { return is_homogeneous() && value == d; }
};

// Sparse multivariate polynomial over Rational with weighted variables.
class WeightedPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit WeightedPoly(int ambient_r);

    static WeightedPoly zero(int r) { return WeightedPoly(r); }
    static WeightedPoly constant(int r, const Rational& c);
    // X_i, 1-based index.
    static WeightedPoly variable(int r, int i);
    static WeightedPoly from_term(int r, const Monomial& m, const Rational& c);

    int ambient_r() const { return ambient_r_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    WeightedPoly operator-() const;
    WeightedPoly& operator+=(const WeightedPoly& o);
    WeightedPoly& operator-=(const WeightedPoly& o);
    friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { a += b; return a; }
    friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { a -= b; return a; }
    friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);

    WeightedPoly scaled(const Rational& c) const;
    WeightedPoly pow(int e) const;

    // Formal partial derivative with respect to X_i (1-based).
    WeightedPoly partial_derivative(int i) const;

    WeightedDegree weighted_degree() const;
    // Largest weighted degree among stored terms; 0 for the zero polynomial.
    int max_weighted_degree() const;

    bool operator==(const WeightedPoly& o) const {
        return ambient_r_ == o.ambient_r_ && terms_ == o.terms_;
    }
    bool operator!=(const WeightedPoly& o) const { return !(*this == o); }

    // Canonical text form, e.g. "X1^2*X2 - 3*X2^2 + 1/3". Terms follow the
    // canonical order; parse/render round-trips exactly.
    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    void check_same_ring(const WeightedPoly& o) const;
    int ambient_r_;
    TermMap terms_;
};

// Exact determinant of a square matrix of polynomials, expansion by minors
// with memoization over column subsets.
WeightedPoly det_poly_matrix(const std::vector<std::vector<WeightedPoly>>& m);

// All exponent vectors in r weighted variables of weighted degree `degree`,
// in canonical order.
std::vector<Monomial> monomials_of_weighted_degree(int r, int degree);

// Random homogeneous polynomial of the given weighted degree with small
// nonzero integer coefficients; never returns zero (degree >= 0 required).
WeightedPoly random_homogeneous_poly(int r, int degree, std::mt19937_64& rng);

} // namespace qsc
