#pragma once

#include <map>
#include <vector>

#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

namespace qsc::chern {

// Polynomials in the chern roots q_1..q_r, exponent-vector keyed. Every q_i
// has degree 1. This is the shared workspace for symmetric-function
// manipulation: the euler-polynomial product and the Schur bialternant both
// live here before descending to the X_i.
class QPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>; // ascending lex

    explicit QPoly(int num_vars);

    static QPoly zero(int n) { return QPoly(n); }
    static QPoly constant(int n, const Rational& c);
    static QPoly variable(int n, int i); // q_i, 1-based

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly scaled(const Rational& c) const;

    bool operator==(const QPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    void add_term(const Exponents& e, const Rational& c);

    // Substitute numeric values for the q_i.
    Rational eval(const std::vector<Rational>& q) const;

private:
    int nvars_;
    TermMap terms_;
};

// Elementary symmetric polynomial e_i(q_1..q_n); e_0 = 1, e_i = 0 for i > n.
QPoly elementary_symmetric(int n, int i);

// Complete homogeneous symmetric polynomial h_j(q_1..q_n).
QPoly complete_homogeneous(int n, int j);

// Vandermonde product over i < j of (q_i - q_j).
QPoly vandermonde(int n);

// Substitute X_i = e_i(q_1..q_r) into a weighted polynomial.
QPoly expand_in_roots(const WeightedPoly& p);

// Inverse direction for symmetric inputs: rewrite in the elementary basis,
// X_i standing for e_i. Throws HomogeneityError when the input is not
// symmetric (detected by a non-monotone leading exponent vector).
WeightedPoly symmetric_to_elementary(const QPoly& s);

} // namespace qsc::chern
