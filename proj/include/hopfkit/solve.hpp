#pragma once

// Exact Gaussian elimination over a field scalar K. Pivoting is "first
// nonzero" (scan columns left to right, take the first remaining row with a
// nonzero entry), which makes kernel bases and quotient sections
// deterministic.

#include <optional>
#include <vector>

#include "hopfkit/linmap.hpp"

namespace hopfkit {

template <class K>
struct Echelon {
    LinMap<K> rref;               // reduced row echelon form
    std::vector<Index> pivots;    // pivot column per rank row, increasing
    Index rank = 0;
};

template <class K>
Echelon<K> row_reduce(LinMap<K> m) {
    Echelon<K> e;
    Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (!(m(i, c) == K(0))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        K inv = K(1) / m(r, c);
        for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == K(0)) continue;
            K f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    e.rref = std::move(m);
    return e;
}

template <class K>
Index rank(const LinMap<K>& m) { return row_reduce(m).rank; }

// Exact basis of ker f, ordered by ascending free column, each vector scaled
// so its first nonzero entry is 1.
template <class K>
std::vector<Vec<K>> kernel_basis(const LinMap<K>& f) {
    Echelon<K> e = row_reduce(f);
    std::vector<bool> is_pivot(f.cols(), false);
    for (Index p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (Index c = 0; c < f.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec<K> v = Vec<K>::Constant(f.cols(), K(0));
        v(c) = K(1);
        for (Index rr = 0; rr < e.rank; ++rr) v(e.pivots[rr]) = -e.rref(rr, c);
        for (Index i = 0; i < v.size(); ++i) {
            if (!(v(i) == K(0))) {
                K inv = K(1) / v(i);
                for (Index k = 0; k < v.size(); ++k) v(k) = v(k) * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
LinMap<K> kernel_matrix(const LinMap<K>& f) {
    auto b = kernel_basis(f);
    LinMap<K> m = zeros<K>(f.cols(), static_cast<Index>(b.size()));
    for (Index j = 0; j < static_cast<Index>(b.size()); ++j) m.col(j) = b[j];
    return m;
}

template <class K>
struct InvertResult {
    std::optional<LinMap<K>> inverse;
    std::optional<Vec<K>> kernel_witness;  // set iff singular
    bool invertible() const { return inverse.has_value(); }
};

// Exact inverse, or an explicit kernel witness when f is singular.
// Non-square inputs are rejected.
template <class K>
InvertResult<K> try_invert(const LinMap<K>& f) {
    if (f.rows() != f.cols()) throw std::invalid_argument("try_invert: map is not square");
    Index n = f.rows();
    LinMap<K> aug = zeros<K>(n, 2 * n);
    aug.leftCols(n) = f;
    aug.rightCols(n) = eye<K>(n);
    Echelon<K> e = row_reduce(aug);
    Index rk = 0;
    for (Index p : e.pivots)
        if (p < n) ++rk;
    InvertResult<K> res;
    if (rk == n) {
        res.inverse = e.rref.rightCols(n);
    } else {
        auto kb = kernel_basis(f);
        res.kernel_witness = kb.front();
    }
    return res;
}

// Solves f x = b; empty when inconsistent. Solution is the one with all free
// coordinates zero.
template <class K>
std::optional<Vec<K>> solve(const LinMap<K>& f, const Vec<K>& b) {
    Index n = f.rows();
    LinMap<K> aug = zeros<K>(n, f.cols() + 1);
    aug.leftCols(f.cols()) = f;
    aug.col(f.cols()) = b;
    Echelon<K> e = row_reduce(aug);
    for (Index p : e.pivots)
        if (p == f.cols()) return std::nullopt;
    Vec<K> x = Vec<K>::Constant(f.cols(), K(0));
    for (Index r = 0; r < static_cast<Index>(e.pivots.size()); ++r)
        x(e.pivots[r]) = e.rref(r, f.cols());
    return x;
}

// Solves F X = B columnwise; empty when any column is inconsistent.
template <class K>
std::optional<LinMap<K>> solve_matrix(const LinMap<K>& f, const LinMap<K>& b) {
    LinMap<K> x = zeros<K>(f.cols(), b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
        auto xc = solve<K>(f, b.col(j));
        if (!xc) return std::nullopt;
        x.col(j) = *xc;
    }
    return x;
}

// Basis of the column space, as columns, in column-RREF (each basis vector
// has a leading 1 in a distinct pivot row, zeros above/below in that row).
template <class K>
LinMap<K> column_space_basis(const LinMap<K>& m) {
    Echelon<K> e = row_reduce(LinMap<K>(m.transpose()));
    LinMap<K> b = zeros<K>(m.rows(), e.rank);
    for (Index r = 0; r < e.rank; ++r) b.col(r) = e.rref.row(r).transpose();
    return b;
}

template <class K>
bool subspace_contains(const LinMap<K>& span_cols, const LinMap<K>& candidates) {
    LinMap<K> joint(span_cols.rows(), span_cols.cols() + candidates.cols());
    joint.leftCols(span_cols.cols()) = span_cols;
    joint.rightCols(candidates.cols()) = candidates;
    return rank(joint) == rank(span_cols);
}

// A quotient V / span(relations), with a fixed section. proj*sec = id and
// proj*relations = 0 hold exactly by construction; sec picks the
// representative supported on non-pivot coordinates.
template <class K>
struct Quotient {
    Index full_dim = 0;
    Index dim = 0;
    LinMap<K> proj;  // dim x full_dim
    LinMap<K> sec;   // full_dim x dim
    LinMap<K> rel;   // full_dim x (#independent relations), column-RREF basis
};

template <class K>
Quotient<K> make_quotient(Index full_dim, const LinMap<K>& relations) {
    Quotient<K> q;
    q.full_dim = full_dim;
    q.rel = column_space_basis(relations);
    Index r = q.rel.cols();
    q.dim = full_dim - r;
    std::vector<bool> is_pivot_row(full_dim, false);
    std::vector<Index> pivot_row_of_col(r, -1);
    for (Index j = 0; j < r; ++j)
        for (Index i = 0; i < full_dim; ++i)
            if (!(q.rel(i, j) == K(0))) {  // leading 1 of the RREF basis column
                is_pivot_row[i] = true;
                pivot_row_of_col[j] = i;
                break;
            }
    std::vector<Index> free_rows;
    for (Index i = 0; i < full_dim; ++i)
        if (!is_pivot_row[i]) free_rows.push_back(i);
    q.proj = zeros<K>(q.dim, full_dim);
    q.sec = zeros<K>(full_dim, q.dim);
    // proj(x) = (x - rel * x|pivot_rows) restricted to free rows
    for (Index k = 0; k < q.dim; ++k) {
        Index fr = free_rows[k];
        q.proj(k, fr) = K(1);
        for (Index j = 0; j < r; ++j) q.proj(k, pivot_row_of_col[j]) = -q.rel(fr, j);
        q.sec(fr, k) = K(1);
    }
    return q;
}

}  // namespace hopfkit
