#pragma once

#include <variant>
#include <vector>

#include "qsc/bigfloat.hpp"
#include "qsc/cyclotomic.hpp"
#include "qsc/grassmann.hpp"
#include "qsc/poly.hpp"

namespace qsc {

enum class Backend { exact, floating };

// One critical point of the perturbed potential: an r-subset of the k-th
// roots of -1, index j naming the root exp(i*pi*(2j+1)/k).
struct CriticalPoint {
    GrassmannSpec spec;
    std::vector<int> root_indices; // strictly increasing, in [0, k)

    CriticalPoint(GrassmannSpec s, std::vector<int> idx);
};

// All binomial(k, r) points in lexicographic order of their index sets.
std::vector<CriticalPoint> enumerate_critical_points(const GrassmannSpec& spec);

// Exact arithmetic in Q(zeta_{2k}); root j is zeta^{2j+1}.
class ExactEvaluator {
public:
    using Value = CyclotomicElement;

    explicit ExactEvaluator(const GrassmannSpec& spec);

    const GrassmannSpec& spec() const { return spec_; }
    Value root(int j) const { return roots_.at(j); }
    Value constant(const Rational& c) const { return field_->constant(c); }
    Value one() const { return field_->one(); }
    Value zero() const { return field_->zero(); }

private:
    GrassmannSpec spec_;
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Value> roots_;
};

// High-precision complex arithmetic; root j is exp(i*pi*(2j+1)/k).
class FloatEvaluator {
public:
    using Value = BigComplex;

    FloatEvaluator(const GrassmannSpec& spec, long precision_bits);

    const GrassmannSpec& spec() const { return spec_; }
    long precision_bits() const { return precision_bits_; }
    Value root(int j) const { return roots_.at(j); }
    Value constant(const Rational& c) const { return BigComplex::from_rational(c, precision_bits_); }
    Value one() const { return constant(Rational(1)); }
    Value zero() const { return BigComplex(precision_bits_); }

private:
    GrassmannSpec spec_;
    long precision_bits_;
    std::vector<Value> roots_;
};

template <class Value>
Value value_pow(Value base, long e, const Value& one) {
    if (e < 0) return value_pow(base.inverse(), -e, one);
    Value acc = one;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

// X_i = e_i of the point's roots, i = 1..r.
template <class Evaluator>
std::vector<typename Evaluator::Value> eval_X_with(const Evaluator& ev, const CriticalPoint& pt) {
    using Value = typename Evaluator::Value;
    const int r = ev.spec().r;
    std::vector<Value> e;
    e.reserve(r + 1);
    e.push_back(ev.one());
    for (int i = 1; i <= r; ++i) e.push_back(ev.zero());
    int used = 0;
    for (int j : pt.root_indices) {
        const Value q = ev.root(j);
        ++used;
        for (int m = std::min(used, r); m >= 1; --m) e[m] += q * e[m - 1];
    }
    return std::vector<Value>(e.begin() + 1, e.end());
}

// Substitute precomputed X values into a polynomial.
template <class Evaluator>
typename Evaluator::Value eval_poly_with(const Evaluator& ev, const WeightedPoly& p,
                                         const std::vector<typename Evaluator::Value>& x_values) {
    using Value = typename Evaluator::Value;
    if (p.ambient_r() != static_cast<int>(x_values.size()))
        throw DimensionError("polynomial does not match the evaluation point");
    Value acc = ev.zero();
    const Value unit = ev.one();
    for (const auto& [m, c] : p.terms()) {
        Value term = ev.constant(c);
        for (int i = 0; i < p.ambient_r(); ++i) {
            const int e = m.exponents[i];
            if (e == 0) continue;
            term = term * value_pow(x_values[i], static_cast<long>(e), unit);
        }
        acc += term;
    }
    return acc;
}

// Hessian at a critical point straight from the roots:
// k^r * prod q_i^{k-1} / (prod_{i<j} (q_i - q_j))^2.
template <class Evaluator>
typename Evaluator::Value hessian_closed_form_with(const Evaluator& ev, const CriticalPoint& pt) {
    using Value = typename Evaluator::Value;
    const int r = ev.spec().r;
    const int k = ev.spec().k;

    mpz_class k_pow_r;
    mpz_ui_pow_ui(k_pow_r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
    Value num = ev.constant(Rational(k_pow_r));
    const Value unit = ev.one();
    for (int j : pt.root_indices) num = num * value_pow(ev.root(j), k - 1, unit);

    Value vand = unit;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            vand = vand * (ev.root(pt.root_indices[a]) - ev.root(pt.root_indices[b]));
    Value denom = vand * vand;
    if (denom.is_zero()) throw DivisionError("repeated roots in a critical point");
    return num * denom.inverse();
}

// Backend-tagged value for the variant-facing API.
using PointValue = std::variant<CyclotomicElement, BigComplex>;

struct EvalSettings {
    Backend backend = Backend::exact;
    long precision_bits = 128;
};

std::vector<PointValue> eval_X(const CriticalPoint& pt, const EvalSettings& s = {});
PointValue eval_poly(const WeightedPoly& p, const CriticalPoint& pt, const EvalSettings& s = {});
PointValue hessian_closed_form(const CriticalPoint& pt, const EvalSettings& s = {});
PointValue invert(const PointValue& v);

// Extract the rational number a point-sum represents. Exact backend: every
// non-constant power-basis coordinate must vanish. Float backend: the
// imaginary part must be below `tolerance` and the real part within
// `tolerance` of a short rational (integers first).
Rational rational_part(const PointValue& v, double tolerance = 1e-20);
Rational rational_from_bigfloat(const BigFloat& x, double tolerance);

// Numerical embedding of an exact value, zeta -> exp(2*pi*i/n).
BigComplex to_complex(const CyclotomicElement& v, long precision_bits);

} // namespace qsc
