#pragma once

#include <stdexcept>
#include <vector>

#include "apolarity.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace apolar {

/// Point of projective space with exact rational coordinates, normalized so
/// the first nonzero coordinate is 1.
struct ProjectivePoint {
    std::vector<Rat> coords;

    explicit ProjectivePoint(std::vector<Rat> c) : coords(std::move(c)) {
        size_t lead = coords.size();
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) {
                lead = i;
                break;
            }
        if (lead == coords.size()) throw std::invalid_argument("ProjectivePoint: zero point");
        Rat scale = coords[lead];
        for (auto& x : coords) x /= scale;
    }

    int num_vars() const { return static_cast<int>(coords.size()); }
    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
};

/// Finite set of pairwise distinct projective points.
class PointSet {
   public:
    explicit PointSet(std::vector<ProjectivePoint> pts) : points_(std::move(pts)) {
        if (points_.empty()) throw std::invalid_argument("PointSet: empty");
        for (const auto& p : points_)
            if (p.num_vars() != points_[0].num_vars())
                throw std::invalid_argument("PointSet: mixed ambient dimensions");
        for (size_t a = 0; a < points_.size(); ++a)
            for (size_t b = a + 1; b < points_.size(); ++b)
                if (points_[a] == points_[b])
                    throw std::invalid_argument("PointSet: points must be pairwise distinct");
    }

    static PointSet from_rows(const std::vector<std::vector<Rat>>& rows) {
        std::vector<ProjectivePoint> pts;
        for (const auto& r : rows) pts.emplace_back(r);
        return PointSet(std::move(pts));
    }

    long size() const { return static_cast<long>(points_.size()); }
    int num_vars() const { return points_[0].num_vars(); }
    const std::vector<ProjectivePoint>& points() const { return points_; }

   private:
    std::vector<ProjectivePoint> points_;
};

/// |X| x dim(S^i) matrix whose (p, beta) entry is the monomial y^beta
/// evaluated at point p. Its kernel is the degree-i slice of I_X.
inline RationalMatrix evaluation_matrix(const PointSet& x, int i) {
    auto basis = monomial_basis(x.num_vars(), i);
    RationalMatrix m(x.size(), static_cast<long>(basis.size()));
    for (long r = 0; r < x.size(); ++r) {
        const auto& p = x.points()[static_cast<size_t>(r)].coords;
        for (size_t c = 0; c < basis.size(); ++c) {
            Rat v(1);
            for (int j = 0; j < x.num_vars(); ++j)
                for (int e = 0; e < basis[c][j]; ++e) v *= p[static_cast<size_t>(j)];
            m.at(r, static_cast<long>(c)) = v;
        }
    }
    return m;
}

inline GradedIdealSlice ideal_slice_points(const PointSet& x, int i) {
    if (i < 0) throw std::invalid_argument("ideal_slice_points: negative degree");
    return detail::slice_from_kernel(x.num_vars(), i, kernel_basis(evaluation_matrix(x, i)));
}

/// Hilbert function of X through its first stable value; it increases
/// strictly and then stays at |X|.
inline HFTable hf_points(const PointSet& x) {
    HFTable t;
    t.source = HFTable::Source::PointSet;
    for (int i = 0;; ++i) {
        long r = rank(evaluation_matrix(x, i));
        t.values.push_back(r);
        if (r == x.size()) break;
    }
    return t;
}

/// First degree where the Hilbert function of X reaches |X|.
inline int regularity_index(const PointSet& x) {
    return static_cast<int>(hf_points(x).values.size()) - 1;
}

/// First difference of the Hilbert function, the Hilbert function of the
/// Artinian reduction by a linear form avoiding X; its values sum to |X|.
inline HFTable artinian_reduction_hf(const PointSet& x, const LinearForm& ell) {
    if (ell.num_vars() != x.num_vars())
        throw std::invalid_argument("artinian_reduction_hf: dimension mismatch");
    for (const auto& p : x.points()) {
        Rat v(0);
        for (int j = 0; j < x.num_vars(); ++j)
            v += ell.coefficients[static_cast<size_t>(j)] * p.coords[static_cast<size_t>(j)];
        if (v == 0)
            throw std::invalid_argument(
                "artinian_reduction_hf: hyperplane meets the point set");
    }
    HFTable hf = hf_points(x);
    HFTable out;
    out.source = HFTable::Source::PointSet;
    long prev = 0;
    for (long v : hf.values) {
        out.values.push_back(v - prev);
        prev = v;
    }
    return out;
}

/// True iff I_X is generated in degree at most m. Castelnuovo-Mumford
/// regularity caps minimal generator degrees at reg(X)+1, so it is enough to
/// check that multiplication by linear forms carries each slice onto the next
/// from degree m up to the regularity index.
inline bool generated_in_degree_at_most(const PointSet& x, int m) {
    if (m < 1) throw std::invalid_argument("generated_in_degree_at_most: m must be positive");
    int reg = regularity_index(x);
    for (int j = m; j <= reg; ++j) {
        GradedIdealSlice cur = ideal_slice_points(x, j);
        GradedIdealSlice next = ideal_slice_points(x, j + 1);
        std::vector<std::vector<Rat>> grown;
        for (const Polynomial& g : cur.basis)
            for (int v = 0; v < x.num_vars(); ++v)
                grown.push_back((Polynomial::variable(x.num_vars(), v) * g).coefficient_vector());
        if (static_cast<long>(canonical_span(grown).size()) != next.dimension()) return false;
    }
    return true;
}

}  // namespace apolar
