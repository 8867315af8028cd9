#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace apolar {

/// Dense matrix of exact rationals. All operations below are deterministic:
/// elimination always picks the first nonzero pivot in column order.
class RationalMatrix {
   public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Rat(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative size");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rat& at(long r, long c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    const Rat& at(long r, long c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

    static RationalMatrix identity(long n) {
        RationalMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static RationalMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        long r = static_cast<long>(rows.size());
        long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
        RationalMatrix m(r, c);
        for (long i = 0; i < r; ++i) {
            if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != c)
                throw std::invalid_argument("from_rows: ragged rows");
            for (long j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return m;
    }

    std::vector<Rat> row(long i) const {
        std::vector<Rat> r(static_cast<size_t>(cols_));
        for (long j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
        return r;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<long> rref() {
        std::vector<long> pivots;
        long r = 0;
        for (long c = 0; c < cols_ && r < rows_; ++c) {
            long p = -1;
            for (long i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (long j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            Rat inv = at(r, c);
            for (long j = c; j < cols_; ++j) at(r, j) /= inv;
            for (long i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                Rat factor = at(i, c);
                for (long j = c; j < cols_; ++j) at(i, j) -= factor * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

   private:
    long rows_, cols_;
    std::vector<Rat> a_;
};

inline long rank(const RationalMatrix& m) {
    RationalMatrix w = m;
    return static_cast<long>(w.rref().size());
}

/// Reduced row echelon form of a spanning set, zero rows dropped. This is the
/// canonical basis of the row space: equal spans yield identical output.
inline std::vector<std::vector<Rat>> canonical_span(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m = RationalMatrix::from_rows(rows);
    auto pivots = m.rref();
    std::vector<std::vector<Rat>> out;
    for (long i = 0; i < static_cast<long>(pivots.size()); ++i) out.push_back(m.row(i));
    return out;
}

/// Canonical basis of the right kernel; rank(m) + result.size() == cols.
inline std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix w = m;
    auto pivots = w.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -w.at(static_cast<long>(pi), f);
        basis.push_back(std::move(v));
    }
    return canonical_span(basis);
}

/// One exact solution of M x = b, with free variables set to zero, or nullopt
/// when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve(const RationalMatrix& m, const std::vector<Rat>& b) {
    if (static_cast<long>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rat> x(static_cast<size_t>(m.cols()), Rat(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = aug.at(static_cast<long>(pi), m.cols());
    return x;
}

/// True iff v lies in the exact linear span of `span`.
inline bool span_contains(const std::vector<std::vector<Rat>>& span, const std::vector<Rat>& v) {
    bool v_zero = true;
    for (const Rat& c : v)
        if (c != 0) {
            v_zero = false;
            break;
        }
    if (v_zero) return true;
    if (span.empty()) return false;
    std::vector<std::vector<Rat>> stacked = span;
    long base = static_cast<long>(canonical_span(span).size());
    stacked.push_back(v);
    return static_cast<long>(canonical_span(stacked).size()) == base;
}

inline bool spans_equal(const std::vector<std::vector<Rat>>& a,
                        const std::vector<std::vector<Rat>>& b) {
    return canonical_span(a) == canonical_span(b);
}

}  // namespace apolar
