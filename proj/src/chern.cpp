#include "qsc/chern.hpp"

#include <algorithm>

namespace qsc::chern {

QPoly::QPoly(int num_vars) : nvars_(num_vars) {
    if (num_vars < 1) throw DimensionError("QPoly needs at least one variable");
}

QPoly QPoly::constant(int n, const Rational& c) {
    QPoly p(n);
    p.add_term(Exponents(n, 0), c);
    return p;
}

QPoly QPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw IndexError("chern-root index out of range");
    QPoly p(n);
    Exponents e(n, 0);
    e[i - 1] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void QPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPoly QPoly::operator-() const {
    QPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (nvars_ != o.nvars_) throw DimensionError("QPoly variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (nvars_ != o.nvars_) throw DimensionError("QPoly variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("QPoly variable count mismatch");
    QPoly out(a.nvars_);
    QPoly::Exponents prod(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) prod[i] = ea[i] + eb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

QPoly QPoly::scaled(const Rational& c) const {
    QPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Rational QPoly::eval(const std::vector<Rational>& q) const {
    if (static_cast<int>(q.size()) != nvars_) throw DimensionError("evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j) term *= q[i];
        acc += term;
    }
    return acc;
}

QPoly elementary_symmetric(int n, int i) {
    if (i < 0) throw IndexError("negative symmetric-function index");
    QPoly out(n);
    if (i > n) return out;
    QPoly::Exponents e(n, 0);
    // all i-subsets of the variables
    std::vector<int> idx(i);
    for (int j = 0; j < i; ++j) idx[j] = j;
    while (true) {
        std::fill(e.begin(), e.end(), 0);
        for (int j : idx) e[j] = 1;
        out.add_term(e, Rational(1));
        if (i == 0) break;
        int pos = i - 1;
        while (pos >= 0 && idx[pos] == n - i + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

QPoly complete_homogeneous(int n, int j) {
    if (j < 0) throw IndexError("negative symmetric-function index");
    // h_j = sum over i of (-1)^{i-1} e_i h_{j-i}, from E(-t) H(t) = 1.
    std::vector<QPoly> h;
    h.reserve(j + 1);
    h.push_back(QPoly::constant(n, Rational(1)));
    std::vector<QPoly> e;
    for (int i = 0; i <= std::min(j, n); ++i) e.push_back(elementary_symmetric(n, i));
    for (int m = 1; m <= j; ++m) {
        QPoly hm(n);
        for (int i = 1; i <= std::min(m, n); ++i) {
            QPoly c = e[i] * h[m - i];
            if (i % 2 == 1)
                hm += c;
            else
                hm -= c;
        }
        h.push_back(hm);
    }
    return h[j];
}

QPoly vandermonde(int n) {
    QPoly out = QPoly::constant(n, Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out = out * (QPoly::variable(n, i) - QPoly::variable(n, j));
    return out;
}

QPoly expand_in_roots(const WeightedPoly& p) {
    const int r = p.ambient_r();
    std::vector<QPoly> e;
    e.reserve(r + 1);
    for (int i = 0; i <= r; ++i) e.push_back(elementary_symmetric(r, i));
    QPoly out(r);
    for (const auto& [m, c] : p.terms()) {
        QPoly term = QPoly::constant(r, c);
        for (int i = 0; i < r; ++i)
            for (int rep = 0; rep < m.exponents[i]; ++rep) term = term * e[i + 1];
        out += term;
    }
    return out;
}

WeightedPoly symmetric_to_elementary(const QPoly& s) {
    const int r = s.num_vars();
    std::vector<QPoly> e;
    e.reserve(r + 1);
    for (int i = 0; i <= r; ++i) e.push_back(elementary_symmetric(r, i));

    WeightedPoly out(r);
    QPoly rest = s;
    while (!rest.is_zero()) {
        // lex-leading term; for a symmetric polynomial its exponents are
        // weakly decreasing
        const auto& [lead, coeff] = *rest.terms().rbegin();
        Monomial xm = Monomial::unit(r);
        for (int i = 0; i < r; ++i) {
            const int next = (i + 1 < r) ? lead[i + 1] : 0;
            if (lead[i] < next) throw HomogeneityError("polynomial is not symmetric in the roots");
            xm.exponents[i] = lead[i] - next;
        }
        QPoly subtract = QPoly::constant(r, coeff);
        for (int i = 0; i < r; ++i)
            for (int rep = 0; rep < xm.exponents[i]; ++rep) subtract = subtract * e[i + 1];
        rest -= subtract;
        out.add_term(xm, coeff);
    }
    return out;
}

} // namespace qsc::chern
