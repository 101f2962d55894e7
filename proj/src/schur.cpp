#include "qsc/schur.hpp"

#include <sstream>

#include "qsc/chern.hpp"

namespace qsc {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::box(int rows, int cols) {
    if (cols == 0) return Partition();
    return Partition(std::vector<int>(rows, cols));
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

bool Partition::fits_box(int rows, int cols) const {
    return length() <= rows && (parts.empty() || parts[0] <= cols);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

Rational SchurExpansion::coefficient(const Partition& p) const {
    auto it = coefficients.find(p);
    return it == coefficients.end() ? Rational(0) : it->second;
}

SchurExpansion schur_expand(const WeightedPoly& p, const GrassmannSpec& spec) {
    if (p.ambient_r() != spec.r) throw DimensionError("polynomial does not match spec.r");
    const auto deg = p.weighted_degree();
    if (deg.kind == WeightedDegree::Kind::mixed)
        throw HomogeneityError("schur expansion requires a homogeneous polynomial");

    SchurExpansion out;
    out.num_vars = spec.r;
    if (p.is_zero()) return out;

    const int r = spec.r;
    const chern::QPoly alternant = chern::expand_in_roots(p) * chern::vandermonde(r);

    // The product is alternating, so only strictly decreasing exponent
    // vectors carry coefficients; each one is lambda + delta for a unique
    // partition lambda.
    for (const auto& [e, c] : alternant.terms()) {
        bool strict = true;
        for (int i = 0; i + 1 < r; ++i)
            if (e[i] <= e[i + 1]) {
                strict = false;
                break;
            }
        if (!strict) continue;
        std::vector<int> parts;
        for (int i = 0; i < r; ++i) {
            const int part = e[i] - (r - 1 - i);
            if (part > 0) parts.push_back(part);
        }
        out.coefficients.emplace(Partition(std::move(parts)), c);
    }
    return out;
}

Rational classical_integral_schur(const WeightedPoly& p, const GrassmannSpec& spec) {
    if (p.is_zero()) return Rational(0);
    const auto deg = p.weighted_degree();
    if (!deg.is_homogeneous_of(spec.dimension()))
        throw DegreeError("classical integral requires weighted degree " +
                          std::to_string(spec.dimension()));
    return schur_expand(p, spec).coefficient(Partition::box(spec.r, spec.k - spec.r));
}

} // namespace qsc
