#pragma once

#include <gmpxx.h>

#include <string>

#include "qsc/errors.hpp"

namespace qsc {

mpz_class binomial(unsigned long n, unsigned long k);

// The pair (r, k) naming the Grassmannian of r-planes in C^k.
struct GrassmannSpec {
    int r;
    int k;

    GrassmannSpec(int r_, int k_) : r(r_), k(k_) {
        if (r < 1 || k <= r)
            throw SpecError("invalid Grassmannian parameters: need 0 < r < k, got r=" +
                            std::to_string(r_) + " k=" + std::to_string(k_));
    }

    int dimension() const { return r * (k - r); }
    mpz_class critical_count() const { return binomial(k, r); }

    bool operator==(const GrassmannSpec& o) const { return r == o.r && k == o.k; }
    std::string str() const { return "G(" + std::to_string(r) + "," + std::to_string(k) + ")"; }
};

} // namespace qsc
