#pragma once

// Dense linear maps over an exact scalar K, stored as Eigen matrices with
// rows = codomain dimension and cols = domain dimension.
//
// Tensor index convention (used by every module in this project):
//   the basis vector e_i (x) e_j of V (x) W, with dim W = w, sits at the
//   zero-based flat index  i*w + j  (row-major, second factor fastest).
// Nested tensors associate to the left under the same rule, so the flat
// index of e_{i1} (x) ... (x) e_{ik} is obtained by folding left to right.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Index = Eigen::Index;

template <class K>
using LinMap = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
Index dom(const LinMap<K>& f) { return f.cols(); }

template <class K>
Index cod(const LinMap<K>& f) { return f.rows(); }

template <class K>
LinMap<K> zeros(Index r, Index c) {
    LinMap<K> m(r, c);
    m.setConstant(K(0));
    return m;
}

template <class K>
LinMap<K> eye(Index n) {
    LinMap<K> m = zeros<K>(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
}

// Kronecker product realizing (x) on maps under the convention above:
// kron(f,g)(e_i (x) e_j) = f(e_i) (x) g(e_j).
template <class K>
LinMap<K> kron(const LinMap<K>& f, const LinMap<K>& g) {
    LinMap<K> out = zeros<K>(f.rows() * g.rows(), f.cols() * g.cols());
    for (Index i1 = 0; i1 < f.rows(); ++i1)
        for (Index j1 = 0; j1 < f.cols(); ++j1) {
            if (f(i1, j1) == K(0)) continue;
            for (Index i2 = 0; i2 < g.rows(); ++i2)
                for (Index j2 = 0; j2 < g.cols(); ++j2)
                    out(i1 * g.rows() + i2, j1 * g.cols() + j2) = f(i1, j1) * g(i2, j2);
        }
    return out;
}

template <class K>
LinMap<K> kron(const LinMap<K>& a, const LinMap<K>& b, const LinMap<K>& c) {
    return kron(kron(a, b), c);
}

template <class K>
LinMap<K> kron(const LinMap<K>& a, const LinMap<K>& b, const LinMap<K>& c, const LinMap<K>& d) {
    return kron(kron(kron(a, b), c), d);
}

// Sparse-aware composition. Structure-constant matrices are mostly
// permutation-like, so skipping zero entries beats the dense product by
// orders of magnitude at tensor-power dimensions.
template <class K>
LinMap<K> mul(const LinMap<K>& a, const LinMap<K>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    LinMap<K> out = zeros<K>(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        for (Index k = 0; k < b.rows(); ++k) {
            const K& bv = b(k, j);
            if (bv == K(0)) continue;
            for (Index i = 0; i < a.rows(); ++i) {
                const K& av = a(i, k);
                if (av == K(0)) continue;
                out(i, j) = out(i, j) + av * bv;
            }
        }
    return out;
}

template <class K, class... Rest>
LinMap<K> mul(const LinMap<K>& a, const LinMap<K>& b, const Rest&... rest) {
    return mul(a, mul(b, rest...));
}

// The symmetric braiding of Vec: flip_{V,W}: V (x) W -> W (x) V.
template <class K>
LinMap<K> flip_map(Index v, Index w) {
    LinMap<K> m = zeros<K>(v * w, v * w);
    for (Index i = 0; i < v; ++i)
        for (Index j = 0; j < w; ++j) m(j * v + i, i * w + j) = K(1);
    return m;
}

template <class K>
bool is_zero(const LinMap<K>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!(m(i, j) == K(0))) return false;
    return true;
}

template <class K>
bool maps_equal(const LinMap<K>& a, const LinMap<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

// Decomposes a flat tensor index into per-factor indices, given factor dims.
inline std::vector<Index> tensor_multiindex(Index flat, const std::vector<Index>& dims) {
    std::vector<Index> out(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
    return out;
}

inline std::string multiindex_str(Index flat, const std::vector<Index>& dims) {
    if (dims.empty()) return std::to_string(flat);
    auto mi = tensor_multiindex(flat, dims);
    std::string s = "(";
    for (size_t k = 0; k < mi.size(); ++k) s += (k ? "," : "") + std::to_string(mi[k]);
    return s + ")";
}

// First input basis index (flat, plus its decomposition over dom_dims) where
// two maps disagree, together with the offending row and both values.
struct Witness {
    Index in_flat = -1;
    Index out_row = -1;
    std::string in_multi, lhs, rhs;
    std::string str() const {
        return "input " + in_multi + ", output row " + std::to_string(out_row) +
               ": lhs=" + lhs + " rhs=" + rhs;
    }
};

template <class K>
std::optional<Witness> first_difference(const LinMap<K>& a, const LinMap<K>& b,
                                        const std::vector<Index>& dom_dims = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        Witness w;
        w.in_multi = "shape";
        w.lhs = std::to_string(a.rows()) + "x" + std::to_string(a.cols());
        w.rhs = std::to_string(b.rows()) + "x" + std::to_string(b.cols());
        return w;
    }
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) {
                Witness w;
                w.in_flat = j;
                w.out_row = i;
                w.in_multi = multiindex_str(j, dom_dims);
                w.lhs = scalar_to_string(a(i, j));
                w.rhs = scalar_to_string(b(i, j));
                return w;
            }
    return std::nullopt;
}

}  // namespace hopfkit
