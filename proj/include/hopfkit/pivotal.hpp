#pragma once

// Pivotal pairs in matrix categories and intertwined objects: verification of
// the four snake identities, induced Q-intertwinings and monoidal products.
// Only the finite inputs of the colimit construction are represented; the
// infinite-dimensional monad built from them stays out of scope.

#include "hopfkit/solve.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

template <class K>
struct PivotalPair {
    Index p_dim = 0, q_dim = 0;
    LinMap<K> cvl;  // 1 -> P (x) Q
    LinMap<K> evl;  // Q (x) P -> 1
    LinMap<K> cvr;  // 1 -> Q (x) P
    LinMap<K> evr;  // P (x) Q -> 1
};

// The pair over P = Q = K^n determined by an invertible matrix g: standard
// duality on the left, (g, g^{-1})-twisted duality on the right.
template <class K>
PivotalPair<K> pivotal_from_matrix(const LinMap<K>& g) {
    auto inv = try_invert(g);
    if (!inv.invertible()) throw std::invalid_argument("pivotal_from_matrix: matrix is singular");
    Index n = g.rows();
    PivotalPair<K> pp;
    pp.p_dim = pp.q_dim = n;
    pp.cvl = zeros<K>(n * n, 1);
    pp.evl = zeros<K>(1, n * n);
    for (Index i = 0; i < n; ++i) {
        pp.cvl(i * n + i, 0) = K(1);
        pp.evl(0, i * n + i) = K(1);
    }
    pp.evr = zeros<K>(1, n * n);
    pp.cvr = zeros<K>(n * n, 1);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            pp.evr(0, i * n + j) = g(i, j);
            pp.cvr(i * n + j, 0) = (*inv.inverse)(i, j);
        }
    return pp;
}

template <class K>
Report check_pivotal_pair(const PivotalPair<K>& pp) {
    Report rep{"pivotal-pair"};
    Index p = pp.p_dim, q = pp.q_dim;
    if (pp.cvl.rows() != p * q || pp.evl.cols() != q * p || pp.cvr.rows() != q * p ||
        pp.evr.cols() != p * q)
        throw std::invalid_argument("check_pivotal_pair: map shapes do not match dims");
    LinMap<K> idp = eye<K>(p), idq = eye<K>(q);
    rep.add_eq("snake.left.P", mul(kron(idp, pp.evl), kron(pp.cvl, idp)), idp, {p});
    rep.add_eq("snake.left.Q", mul(kron(pp.evl, idq), kron(idq, pp.cvl)), idq, {q});
    rep.add_eq("snake.right.P", mul(kron(pp.evr, idp), kron(idp, pp.cvr)), idp, {p});
    rep.add_eq("snake.right.Q", mul(kron(idq, pp.evr), kron(pp.cvr, idq)), idq, {q});
    return rep;
}

template <class K>
struct Intertwiner {
    PivotalPair<K> pair;
    Index x_dim = 0;
    LinMap<K> sigma;  // X (x) P -> P (x) X, invertible
};

// sigma_bar       = (evl (x) X (x) Q)(Q (x) sigma (x) Q)(Q (x) X (x) cvl)
// sigma_bar_inv   = (Q (x) X (x) evr)(Q (x) sigma^{-1} (x) Q)(cvr (x) X (x) Q)
template <class K>
std::pair<LinMap<K>, LinMap<K>> induced_q_intertwinings(const Intertwiner<K>& it) {
    Index q = it.pair.q_dim, x = it.x_dim;
    auto inv = try_invert(it.sigma);
    if (!inv.invertible()) throw std::invalid_argument("intertwiner: sigma is singular");
    LinMap<K> idq = eye<K>(q), idx = eye<K>(x);
    LinMap<K> bar = mul(kron(it.pair.evl, idx, idq), kron(idq, it.sigma, idq),
                        kron(idq, idx, it.pair.cvl));
    LinMap<K> bar_inv = mul(kron(idq, idx, it.pair.evr), kron(idq, *inv.inverse, idq),
                            kron(it.pair.cvr, idx, idq));
    return {bar, bar_inv};
}

template <class K>
Report check_intertwiner(const Intertwiner<K>& it) {
    Report rep{"intertwiner"};
    rep.merge(check_pivotal_pair(it.pair), "pair");
    auto [bar, bar_inv] = induced_q_intertwinings(it);
    Index q = it.pair.q_dim, x = it.x_dim;
    rep.add_eq("induced.inverse.left", mul(bar_inv, bar), eye<K>(q * x), {q, x});
    rep.add_eq("induced.inverse.right", mul(bar, bar_inv), eye<K>(x * q), {x, q});
    return rep;
}

// (X, sigma) (x) (Y, tau) = (X (x) Y, (sigma (x) Y)(X (x) tau)); the result is
// verified to be an intertwiner again (internal assertion).
template <class K>
Intertwiner<K> tensor_intertwiners(const Intertwiner<K>& a, const Intertwiner<K>& b) {
    if (a.pair.p_dim != b.pair.p_dim || a.pair.q_dim != b.pair.q_dim ||
        !maps_equal(a.pair.cvl, b.pair.cvl) || !maps_equal(a.pair.evl, b.pair.evl) ||
        !maps_equal(a.pair.cvr, b.pair.cvr) || !maps_equal(a.pair.evr, b.pair.evr))
        throw std::invalid_argument("tensor_intertwiners: pair mismatch");
    Intertwiner<K> out;
    out.pair = a.pair;
    out.x_dim = a.x_dim * b.x_dim;
    out.sigma = mul(kron(a.sigma, eye<K>(b.x_dim)), kron(eye<K>(a.x_dim), b.sigma));
    if (!check_intertwiner(out).pass())
        throw std::logic_error("tensor_intertwiners: product fails the intertwiner condition");
    return out;
}

}  // namespace hopfkit
