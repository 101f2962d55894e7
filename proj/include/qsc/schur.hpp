#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsc/grassmann.hpp"
#include "qsc/poly.hpp"

namespace qsc {

// Weakly decreasing sequence of positive integers indexing the Schur basis.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    static Partition box(int rows, int cols); // (cols, cols, ..., cols), rows times

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const;
    bool fits_box(int rows, int cols) const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const; // "(2,1)"; the empty partition prints "()"
};

// A symmetric polynomial written in the Schur basis of r variables.
struct SchurExpansion {
    int num_vars = 0;
    std::map<Partition, Rational> coefficients;

    Rational coefficient(const Partition& p) const;
};

// Expand p(e_1(q),...,e_r(q)) in the Schur basis by the bialternant method:
// multiply by the Vandermonde alternant and read off the strictly decreasing
// exponent vectors. Requires homogeneous input.
SchurExpansion schur_expand(const WeightedPoly& p, const GrassmannSpec& spec);

// Classical intersection number: the coefficient of the full-box Schur
// polynomial s_{((k-r)^r)}. Requires weighted degree r(k-r).
Rational classical_integral_schur(const WeightedPoly& p, const GrassmannSpec& spec);

} // namespace qsc
