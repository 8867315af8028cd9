#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace apolar {

/// Exponent vector of a monomial in `size()` variables.
struct MultiIndex {
    std::vector<int> exponents;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : exponents(e) {}

    int size() const { return static_cast<int>(exponents.size()); }
    int operator[](int i) const { return exponents[static_cast<size_t>(i)]; }
    int& operator[](int i) { return exponents[static_cast<size_t>(i)]; }

    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    bool operator==(const MultiIndex& o) const { return exponents == o.exponents; }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }

    /// Componentwise beta <= alpha, the divisibility order of monomials.
    bool divides(const MultiIndex& alpha) const {
        if (size() != alpha.size()) return false;
        for (int i = 0; i < size(); ++i)
            if (exponents[static_cast<size_t>(i)] > alpha[i]) return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (int i = 0; i < size(); ++i) r[i] += o[i];
        return r;
    }

    /// alpha - beta; caller guarantees beta.divides(alpha).
    MultiIndex operator-(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (int i = 0; i < size(); ++i) r[i] -= o[i];
        return r;
    }

    Int factorial_product() const {  // alpha!
        Int r(1);
        for (int e : exponents) r *= factorial(e);
        return r;
    }
};

/// The fixed monomial order of the library: by total degree, then
/// lexicographically with x0 > x1 > ... (so x0^2 precedes x0*x1 precedes x1^2).
inline bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                        a.exponents.begin(), a.exponents.end());
}

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return graded_lex_less(a, b); }
};

namespace detail {
inline void enumerate_rec(int nvars, int pos, int remaining, MultiIndex& cur,
                          std::vector<MultiIndex>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate_rec(nvars, pos + 1, remaining - e, cur, out);
    }
}
}  // namespace detail

/// All exponent vectors of total degree j in `nvars` variables, in the fixed
/// monomial order. Length is binom(j + nvars - 1, nvars - 1).
inline std::vector<MultiIndex> monomial_basis(int nvars, int j) {
    if (nvars < 1) throw std::invalid_argument("monomial_basis: need at least one variable");
    if (j < 0) throw std::invalid_argument("monomial_basis: negative degree");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>(monomial_space_dim(nvars, j)));
    MultiIndex cur(std::vector<int>(static_cast<size_t>(nvars), 0));
    detail::enumerate_rec(nvars, 0, j, cur, out);
    return out;
}

/// Position of alpha within monomial_basis(alpha.size(), alpha.degree()).
inline long monomial_position(const std::vector<MultiIndex>& basis, const MultiIndex& alpha) {
    auto it = std::lower_bound(basis.begin(), basis.end(), alpha, GradedLexLess{});
    if (it == basis.end() || !(*it == alpha))
        throw std::logic_error("monomial_position: index not in basis");
    return static_cast<long>(it - basis.begin());
}

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
    os << "(";
    for (int i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    return os << ")";
}

}  // namespace apolar
