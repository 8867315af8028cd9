#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace apolar {

/// Matrix of the contraction cat_i(f) : S^i V* -> S^(d-i) V in the fixed
/// monomial order. Rows are indexed by degree-(d-i) monomials, columns by
/// degree-i dual monomials; entry(alpha', beta) is the coefficient of
/// x^alpha' in y^beta applied to f.
struct CatalecticantMatrix {
    int contraction_degree = 0;
    std::vector<MultiIndex> row_basis;
    std::vector<MultiIndex> col_basis;
    RationalMatrix matrix;

    long row_index(const MultiIndex& a) const { return monomial_position(row_basis, a); }
    long col_index(const MultiIndex& b) const { return monomial_position(col_basis, b); }
};

inline CatalecticantMatrix catalecticant(const Polynomial& f, int i) {
    if (i < 0 || i > f.degree())
        throw std::invalid_argument("catalecticant: contraction degree out of range");
    CatalecticantMatrix cat;
    cat.contraction_degree = i;
    cat.row_basis = monomial_basis(f.num_vars(), f.degree() - i);
    cat.col_basis = monomial_basis(f.num_vars(), i);
    cat.matrix = RationalMatrix(static_cast<long>(cat.row_basis.size()),
                                static_cast<long>(cat.col_basis.size()));
    // entry(alpha', beta) = (alpha'+beta)!/alpha'! * f_(alpha'+beta)
    for (long c = 0; c < cat.matrix.cols(); ++c) {
        const MultiIndex& beta = cat.col_basis[static_cast<size_t>(c)];
        for (const auto& [alpha, coeff] : f.terms()) {
            if (!beta.divides(alpha)) continue;
            MultiIndex rest = alpha - beta;
            Rat scale(alpha.factorial_product() / rest.factorial_product());
            cat.matrix.at(cat.row_index(rest), c) = coeff * scale;
        }
    }
    return cat;
}

struct HFTable {
    enum class Source { ApolarAlgebra, PointSet, BigradedSlice };
    std::vector<long> values;
    Source source = Source::ApolarAlgebra;

    long sum() const {
        long s = 0;
        for (long v : values) s += v;
        return s;
    }
};

/// Hilbert function of the apolar algebra of f: HF(i) = rank cat_i(f) for
/// i = 0..deg(f). Gorenstein symmetry gives HF(i) = HF(d-i).
inline HFTable apolar_hf(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("apolar_hf: zero polynomial");
    HFTable t;
    t.source = HFTable::Source::ApolarAlgebra;
    for (int i = 0; i <= f.degree(); ++i) t.values.push_back(rank(catalecticant(f, i).matrix));
    return t;
}

/// max_i HF(A_Ann(f); i), a lower bound for both rank and cactus rank.
inline long catalecticant_lower_bound(const Polynomial& f) {
    auto t = apolar_hf(f);
    return *std::max_element(t.values.begin(), t.values.end());
}

namespace detail {
inline std::vector<std::vector<int>> sorted_subsets(int nvars, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > nvars) return out;
    std::vector<int> cur(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int pos = size - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == nvars - size + pos) --pos;
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < size; ++i)
            cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
    }
    return out;
}

/// Position j would take when inserted into sorted subset s (which must not
/// contain j); the wedge sign is (-1)^position.
inline int insertion_parity(const std::vector<int>& s, int j) {
    int pos = 0;
    for (int v : s)
        if (v < j) ++pos;
    return pos % 2 == 0 ? 1 : -1;
}
}  // namespace detail

/// Koszul flattening of f: the composition of cat_i(f) tensored with the
/// identity of an exterior power, followed by the Koszul differential
/// g (x) w  |->  sum_j dg/dx_j (x) x_j ^ w.
///
/// Exterior indices are arranged so that rank at f = x0^d equals
/// binom(n, p-1), the normalizing constant of the associated rank lower
/// bound: columns pair degree-i dual monomials with size-(p-1) variable
/// subsets, rows pair degree-(d-i-1) monomials with size-p subsets. Subsets
/// are kept sorted; wedge signs are insertion parities.
struct KoszulFlatteningMatrix {
    int i = 0;
    int p = 0;
    std::vector<MultiIndex> row_monomials;
    std::vector<std::vector<int>> row_subsets;
    std::vector<MultiIndex> col_monomials;
    std::vector<std::vector<int>> col_subsets;
    RationalMatrix matrix;
};

inline KoszulFlatteningMatrix koszul_flattening(const Polynomial& f, int i, int p) {
    int n = f.num_vars() - 1;
    if (i < 0 || i > f.degree() - 1)
        throw std::invalid_argument("koszul_flattening: contraction degree out of range");
    if (p < 0 || p > n) throw std::invalid_argument("koszul_flattening: exterior power out of range");

    KoszulFlatteningMatrix kf;
    kf.i = i;
    kf.p = p;
    kf.row_monomials = monomial_basis(f.num_vars(), f.degree() - i - 1);
    kf.row_subsets = detail::sorted_subsets(f.num_vars(), p);
    kf.col_monomials = monomial_basis(f.num_vars(), i);
    kf.col_subsets = detail::sorted_subsets(f.num_vars(), p - 1);

    long rows = static_cast<long>(kf.row_monomials.size() * kf.row_subsets.size());
    long cols = static_cast<long>(kf.col_monomials.size() * kf.col_subsets.size());
    kf.matrix = RationalMatrix(rows, cols);
    if (cols == 0 || rows == 0) return kf;

    CatalecticantMatrix cat = catalecticant(f, i);
    long nsub_rows = static_cast<long>(kf.row_subsets.size());

    for (size_t cm = 0; cm < kf.col_monomials.size(); ++cm) {
        // y^beta o f expressed on the degree-(d-i) basis
        std::vector<Rat> image(cat.row_basis.size());
        for (size_t r = 0; r < cat.row_basis.size(); ++r)
            image[r] = cat.matrix.at(static_cast<long>(r), static_cast<long>(cm));
        for (size_t cs = 0; cs < kf.col_subsets.size(); ++cs) {
            const std::vector<int>& s = kf.col_subsets[cs];
            long col = static_cast<long>(cm * kf.col_subsets.size() + cs);
            for (size_t g = 0; g < cat.row_basis.size(); ++g) {
                if (image[g] == 0) continue;
                const MultiIndex& gamma = cat.row_basis[g];
                for (int j = 0; j <= n; ++j) {
                    if (gamma[j] == 0) continue;
                    if (std::find(s.begin(), s.end(), j) != s.end()) continue;
                    std::vector<int> t = s;
                    t.insert(std::upper_bound(t.begin(), t.end(), j), j);
                    MultiIndex reduced = gamma;
                    reduced[j] -= 1;
                    long rm = monomial_position(kf.row_monomials, reduced);
                    long rs = static_cast<long>(
                        std::lower_bound(kf.row_subsets.begin(), kf.row_subsets.end(), t) -
                        kf.row_subsets.begin());
                    long row = rm * nsub_rows + rs;
                    Rat term = image[g] * Rat(gamma[j]) * Rat(detail::insertion_parity(s, j));
                    kf.matrix.at(row, col) += term;
                }
            }
        }
    }
    return kf;
}

/// ceil(rank(flatKos) / binom(n, p-1)); zero for the degenerate p = 0 case.
inline long koszul_lower_bound(const Polynomial& f, int i, int p) {
    if (p == 0) return 0;
    long denom = binomial_l(f.num_vars() - 1, p - 1);
    if (denom == 0) return 0;
    return ceil_div(rank(koszul_flattening(f, i, p).matrix), denom);
}

/// When cat_k(f) is surjective the k-th gradient rank is exactly the
/// dimension of S^(d-k) V; otherwise the criterion does not apply.
inline std::optional<long> surjective_cat_gradient_rank(const Polynomial& f, int k) {
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument("surjective_cat_gradient_rank: 0 < k < deg(f) required");
    long target = monomial_space_dim(f.num_vars(), f.degree() - k);
    if (rank(catalecticant(f, k).matrix) == target) return target;
    return std::nullopt;
}

}  // namespace apolar
