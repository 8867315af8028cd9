#pragma once

#include <stdexcept>
#include <vector>

#include "catalecticant.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace apolar {

/// Degree-i slice of a graded ideal, stored as a canonical (reduced-echelon)
/// basis of dual polynomials.
struct GradedIdealSlice {
    int degree = 0;
    std::vector<Polynomial> basis;

    long dimension() const { return static_cast<long>(basis.size()); }

    std::vector<std::vector<Rat>> coefficient_rows() const {
        std::vector<std::vector<Rat>> rows;
        for (const Polynomial& p : basis) rows.push_back(p.coefficient_vector());
        return rows;
    }

    bool operator==(const GradedIdealSlice& o) const {
        return degree == o.degree && basis == o.basis;
    }
};

namespace detail {
inline GradedIdealSlice slice_from_kernel(int num_vars, int degree,
                                          const std::vector<std::vector<Rat>>& kernel) {
    GradedIdealSlice s;
    s.degree = degree;
    for (const auto& v : kernel)
        s.basis.push_back(Polynomial::from_coefficient_vector(num_vars, degree, v));
    return s;
}

inline GradedIdealSlice full_slice(int num_vars, int degree) {
    GradedIdealSlice s;
    s.degree = degree;
    for (const MultiIndex& a : monomial_basis(num_vars, degree))
        s.basis.push_back(Polynomial::monomial(a));
    return s;
}
}  // namespace detail

/// Degree-i slice of Ann(f), i.e. the kernel of cat_i(f).
inline GradedIdealSlice apolar_slice(const Polynomial& f, int i) {
    if (i < 0 || i > f.degree()) throw std::invalid_argument("apolar_slice: degree out of range");
    return detail::slice_from_kernel(f.num_vars(), i, kernel_basis(catalecticant(f, i).matrix));
}

/// Degree-i slice of the simultaneous apolar ideal of a family, computed as
/// the kernel of the vertically stacked catalecticants. Operators of degree
/// beyond the family degree annihilate everything, so the slice is full there.
inline GradedIdealSlice simultaneous_apolar_slice(const std::vector<Polynomial>& family, int i) {
    if (family.empty()) throw std::invalid_argument("simultaneous_apolar_slice: empty family");
    int nv = family[0].num_vars();
    int e = family[0].degree();
    for (const Polynomial& f : family)
        if (f.num_vars() != nv || f.degree() != e)
            throw std::invalid_argument("simultaneous_apolar_slice: family shape mismatch");
    if (i < 0) throw std::invalid_argument("simultaneous_apolar_slice: negative degree");
    if (i > e) return detail::full_slice(nv, i);

    long block_rows = monomial_space_dim(nv, e - i);
    long cols = monomial_space_dim(nv, i);
    RationalMatrix stacked(block_rows * static_cast<long>(family.size()), cols);
    for (size_t m = 0; m < family.size(); ++m) {
        CatalecticantMatrix cat = catalecticant(family[m], i);
        for (long r = 0; r < block_rows; ++r)
            for (long c = 0; c < cols; ++c)
                stacked.at(static_cast<long>(m) * block_rows + r, c) = cat.matrix.at(r, c);
    }
    return detail::slice_from_kernel(nv, i, kernel_basis(stacked));
}

inline HFTable simultaneous_apolar_hf(const std::vector<Polynomial>& family) {
    if (family.empty()) throw std::invalid_argument("simultaneous_apolar_hf: empty family");
    HFTable t;
    t.source = HFTable::Source::ApolarAlgebra;
    int e = family[0].degree();
    for (int i = 0; i <= e; ++i) {
        long dim = monomial_space_dim(family[0].num_vars(), i);
        t.values.push_back(dim - simultaneous_apolar_slice(family, i).dimension());
    }
    return t;
}

/// Degree-i slice of the simultaneous apolar ideal of the k-th gradient of f.
/// It equals the slice of Ann(f) for i <= d-k and the full dual space above.
inline GradedIdealSlice gradient_apolar_slice(const Polynomial& f, int k, int i) {
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument("gradient_apolar_slice: 0 < k < deg(f) required");
    if (i < 0) throw std::invalid_argument("gradient_apolar_slice: negative degree");
    if (i >= f.degree() - k + 1) return detail::full_slice(f.num_vars(), i);
    return apolar_slice(f, i);
}

/// Same slice computed the long way, as the intersection of the kernels of
/// cat_i of every order-k partial. Kept as an independent route for testing.
inline GradedIdealSlice gradient_apolar_slice_by_partials(const Polynomial& f, int k, int i) {
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument("gradient_apolar_slice_by_partials: 0 < k < deg(f) required");
    return simultaneous_apolar_slice(gradient_set(f, k), i);
}

/// True iff the ideal generated by `generators` is contained in Ann(f);
/// since Ann(f) is an ideal it suffices that every generator annihilates f.
inline bool verify_apolar(const Polynomial& f, const std::vector<Polynomial>& generators) {
    for (const Polynomial& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("verify_apolar: zero generator");
        if (!apolar_apply(g, f).is_zero()) return false;
    }
    return true;
}

inline bool verify_simultaneous_apolar(const std::vector<Polynomial>& family,
                                       const std::vector<Polynomial>& generators) {
    if (family.empty()) throw std::invalid_argument("verify_simultaneous_apolar: empty family");
    int e = family[0].degree();
    for (const Polynomial& f : family)
        if (f.degree() != e)
            throw std::invalid_argument("verify_simultaneous_apolar: family degree mismatch");
    for (const Polynomial& f : family)
        if (!verify_apolar(f, generators)) return false;
    return true;
}

/// Exact solve of f_j = sum_i lambda_(j,i) ell_i^e for every member of the
/// family. Inconsistency means the chosen points do not span the family.
struct DecompositionSolve {
    bool consistent = false;
    std::vector<std::vector<Rat>> coefficients;  // [family member][point]
};

inline DecompositionSolve decomposition_coefficients(const std::vector<Polynomial>& family,
                                                     const std::vector<LinearForm>& points) {
    if (family.empty()) throw std::invalid_argument("decomposition_coefficients: empty family");
    if (points.empty()) throw std::invalid_argument("decomposition_coefficients: no points");
    int nv = family[0].num_vars();
    int e = family[0].degree();
    for (const Polynomial& f : family)
        if (f.num_vars() != nv || f.degree() != e)
            throw std::invalid_argument("decomposition_coefficients: family shape mismatch");
    for (size_t a = 0; a < points.size(); ++a) {
        if (points[a].num_vars() != nv)
            throw std::invalid_argument("decomposition_coefficients: point size mismatch");
        for (size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b])
                throw std::invalid_argument(
                    "decomposition_coefficients: points must be projectively distinct");
    }

    long rows = monomial_space_dim(nv, e);
    RationalMatrix m(rows, static_cast<long>(points.size()));
    for (size_t j = 0; j < points.size(); ++j) {
        auto col = power_of_linear_form(points[j], e).coefficient_vector();
        for (long r = 0; r < rows; ++r)
            m.at(r, static_cast<long>(j)) = col[static_cast<size_t>(r)];
    }

    DecompositionSolve out;
    out.consistent = true;
    for (const Polynomial& f : family) {
        auto x = solve(m, f.coefficient_vector());
        if (!x) {
            out.consistent = false;
            out.coefficients.clear();
            return out;
        }
        out.coefficients.push_back(*x);
    }
    return out;
}

/// Partially symmetric tensor t = sum a_i (x) w_i with a one-dimensional
/// grading on the auxiliary side.
struct BigradedTensor {
    int slots = 0;
    std::vector<Polynomial> components;

    BigradedTensor(int s, std::vector<Polynomial> comps)
        : slots(s), components(std::move(comps)) {
        if (slots <= 0 || components.size() != static_cast<size_t>(slots))
            throw std::invalid_argument("BigradedTensor: slot count mismatch");
        for (const Polynomial& w : components)
            if (w.num_vars() != components[0].num_vars() || w.degree() != components[0].degree())
                throw std::invalid_argument("BigradedTensor: components must share shape");
    }

    int component_degree() const { return components[0].degree(); }
    int num_vars() const { return components[0].num_vars(); }
};

/// The tensor whose Segre rank is the simultaneous rank of the k-th gradient:
/// one slot per order-k derivative, components in monomial-basis order.
inline BigradedTensor build_gradient_tensor(const Polynomial& f, int k) {
    auto comps = gradient_set(f, k);
    int slots = static_cast<int>(comps.size());
    return BigradedTensor(slots, std::move(comps));
}

/// Bigraded Hilbert function of the apolar algebra of t. Row a (the A*-degree,
/// 0 or 1) and column j (the V*-degree) hold the rank of the contraction
/// S^a A* (x) S^j V* -> S^(1-a) A (x) S^(e-j) V; rows beyond the A-side socle
/// vanish and are not stored.
struct BigradedHFTable {
    std::vector<std::vector<long>> values;  // values[a][j], a = 0..1, j = 0..e
};

inline BigradedHFTable bigraded_apolar_hf(const BigradedTensor& t) {
    bool any_nonzero = false;
    for (const Polynomial& w : t.components) any_nonzero |= !w.is_zero();
    if (!any_nonzero) throw std::invalid_argument("bigraded_apolar_hf: zero tensor");

    int nv = t.num_vars();
    int e = t.component_degree();
    BigradedHFTable table;
    table.values.assign(2, std::vector<long>(static_cast<size_t>(e + 1), 0));

    for (int j = 0; j <= e; ++j) {
        long block_rows = monomial_space_dim(nv, e - j);
        long cols = monomial_space_dim(nv, j);
        // a = 0: component catalecticants stacked vertically
        RationalMatrix stacked(block_rows * t.slots, cols);
        // a = 1: the same blocks side by side
        RationalMatrix wide(block_rows, cols * t.slots);
        for (int m = 0; m < t.slots; ++m) {
            CatalecticantMatrix cat = catalecticant(t.components[static_cast<size_t>(m)], j);
            for (long r = 0; r < block_rows; ++r)
                for (long c = 0; c < cols; ++c) {
                    stacked.at(m * block_rows + r, c) = cat.matrix.at(r, c);
                    wide.at(r, m * cols + c) = cat.matrix.at(r, c);
                }
        }
        table.values[0][static_cast<size_t>(j)] = rank(stacked);
        table.values[1][static_cast<size_t>(j)] = rank(wide);
    }
    return table;
}

}  // namespace apolar
