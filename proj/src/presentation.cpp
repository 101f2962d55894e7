#include "qsc/presentation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "qsc/chern.hpp"

namespace qsc {

std::vector<WeightedPoly> inverse_series(const GrassmannSpec& spec, int up_to) {
    const int r = spec.r;
    std::vector<WeightedPoly> y;
    y.reserve(up_to + 1);
    y.push_back(WeightedPoly::constant(r, Rational(1)));
    for (int m = 1; m <= up_to; ++m) {
        // P_t * Q_t = 1  =>  y_m = -(X_1 y_{m-1} + ... + X_r y_{m-r})
        WeightedPoly ym(r);
        for (int i = 1; i <= std::min(r, m); ++i)
            ym -= WeightedPoly::variable(r, i) * y[m - i];
        y.push_back(std::move(ym));
    }
    return y;
}

std::vector<WeightedPoly> log_series(const GrassmannSpec& spec, int up_to) {
    const int r = spec.r;
    // From P_t' = P_t * (log P_t)', equating coefficients of t^{n-1}:
    //   n W_n = n X_n [n <= r] - sum_{j=1}^{min(r,n-1)} (n-j) X_j W_{n-j}
    std::vector<WeightedPoly> w;
    w.reserve(up_to + 1);
    w.push_back(WeightedPoly::zero(r));
    for (int n = 1; n <= up_to; ++n) {
        WeightedPoly wn(r);
        if (n <= r) wn += WeightedPoly::variable(r, n);
        for (int j = 1; j <= std::min(r, n - 1); ++j)
            wn -= (WeightedPoly::variable(r, j) * w[n - j]).scaled(Rational(n - j, n));
        w.push_back(std::move(wn));
    }
    return w;
}

WeightedPoly euler_polynomial(const GrassmannSpec& spec) {
    using chern::QPoly;
    const int r = spec.r;
    const int c = spec.k - spec.r;
    // Splitting product for c_{r(k-r)}(S* tensor Q): with X_i = e_i(q),
    // the quotient chern classes become complete homogeneous polynomials,
    // c_j(Q) = h_j(q_1..q_r).
    std::vector<QPoly> h;
    h.reserve(c + 1);
    for (int j = 0; j <= c; ++j) h.push_back(chern::complete_homogeneous(r, j));

    QPoly product = QPoly::constant(r, Rational(1));
    for (int i = 1; i <= r; ++i) {
        QPoly factor(r);
        QPoly qi_power = QPoly::constant(r, Rational(1));
        // factor = q_i^c + q_i^{c-1} h_1 + ... + h_c, assembled low power first
        for (int j = c; j >= 0; --j) {
            factor += qi_power * h[j];
            if (j > 0) qi_power = qi_power * QPoly::variable(r, i);
        }
        product = product * factor;
    }
    return chern::symmetric_to_elementary(product);
}

IntPoly poincare_polynomial(const GrassmannSpec& spec) {
    // Gaussian binomial in t^2: prod_{i=k-r+1}^{k}(1-t^{2i}) / prod_{i=1}^{r}(1-t^{2i})
    IntPoly num = IntPoly::one();
    for (int i = spec.k - spec.r + 1; i <= spec.k; ++i)
        num = num * (IntPoly::constant(1) - IntPoly::monomial(1, 2 * i));
    IntPoly den = IntPoly::one();
    for (int i = 1; i <= spec.r; ++i)
        den = den * (IntPoly::constant(1) - IntPoly::monomial(1, 2 * i));
    return num.exact_divide(den); // throws if the division is not exact
}

RingPresentation build_presentation(const GrassmannSpec& spec) {
    const int r = spec.r;
    const int k = spec.k;

    RingPresentation p{spec,
                       inverse_series(spec, k),
                       log_series(spec, k + 1),
                       WeightedPoly::zero(r),
                       WeightedPoly::zero(r),
                       {},
                       WeightedPoly::zero(r),
                       WeightedPoly::zero(r),
                       IntPoly()};

    p.potential = (k % 2 == 0) ? p.w_series[k + 1] : -p.w_series[k + 1];
    p.perturbed = p.potential + WeightedPoly::variable(r, 1);

    p.gradient.reserve(r);
    for (int i = 1; i <= r; ++i) p.gradient.push_back(p.perturbed.partial_derivative(i));

    std::vector<std::vector<WeightedPoly>> second(r, std::vector<WeightedPoly>(r, WeightedPoly::zero(r)));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) second[i - 1][j - 1] = p.gradient[i - 1].partial_derivative(j);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (second[i][j] != second[j][i])
                throw Error("Hessian matrix of second partials is not symmetric");
    p.hessian = det_poly_matrix(second);

    p.euler = euler_polynomial(spec);
    p.poincare = poincare_polynomial(spec);
    return p;
}

std::vector<WeightedPoly> RingPresentation::ideal_generators() const {
    std::vector<WeightedPoly> gens;
    for (int m = spec.k - spec.r + 1; m <= spec.k; ++m) gens.push_back(y[m]);
    return gens;
}

const RingPresentation& presentation_for(const GrassmannSpec& spec) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<RingPresentation>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.r, spec.k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<RingPresentation>(build_presentation(spec))).first;
    return *it->second;
}

} // namespace qsc
