#pragma once

#include <vector>

#include "qsc/grassmann.hpp"
#include "qsc/intpoly.hpp"
#include "qsc/poly.hpp"

namespace qsc {

// Coefficients y_0..y_up_to of the power-series inverse of
// P_t = 1 + X_1 t + ... + X_r t^r.
std::vector<WeightedPoly> inverse_series(const GrassmannSpec& spec, int up_to);

// Coefficients W_0..W_up_to of log(P_t). W_0 = 0 and each W_n is homogeneous
// of weighted degree n.
std::vector<WeightedPoly> log_series(const GrassmannSpec& spec, int up_to);

// Polynomial representative of the euler class of the tangent bundle,
// c_{r(k-r)}(S* tensor Q), built through the chern-root splitting product.
// Homogeneous of weighted degree r(k-r).
WeightedPoly euler_polynomial(const GrassmannSpec& spec);

// Poincare polynomial of G(r,k): the Gaussian binomial in t^2, computed by
// exact polynomial division.
IntPoly poincare_polynomial(const GrassmannSpec& spec);

// Everything the rest of the library needs about the cohomology presentation
// of one Grassmannian. Immutable once built.
struct RingPresentation {
    GrassmannSpec spec;
    std::vector<WeightedPoly> y;        // y_0..y_k
    std::vector<WeightedPoly> w_series; // W_0..W_{k+1}
    WeightedPoly potential;             // W = (-1)^k W_{k+1}
    WeightedPoly perturbed;             // W~ = W + X_1
    std::vector<WeightedPoly> gradient; // dW~/dX_i, i = 1..r
    WeightedPoly hessian;               // det of second partials of W~
    WeightedPoly euler;
    IntPoly poincare;

    // Generators of the classical ideal: y_{k-r+1}..y_k.
    std::vector<WeightedPoly> ideal_generators() const;
};

RingPresentation build_presentation(const GrassmannSpec& spec);

// Cached accessor; presentations are shared and immutable. Safe for
// concurrent use.
const RingPresentation& presentation_for(const GrassmannSpec& spec);

} // namespace qsc
