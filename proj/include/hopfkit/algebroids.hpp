#pragma once

// Left bialgebroids over a finite-dimensional base algebra A and Schauenburg
// Hopf algebroids: staged axiom checker, the beta/theta maps on their quotient
// tensor spaces, closed-structure actions, the induced coalgebra H (x)_A with
// its braiding, cross products by braided Hopf objects, and Hopf modules.
//
// A-bimodules are realized uniformly as left modules over the enveloping
// algebra A^e = A (x) A^op; the five tensor flavours ((x)_A, (x)_{A^op},
// odot, diamond, boxtimes) are explicit quotients with stored
// projection/section pairs.

#include "hopfkit/rep.hpp"
#include "hopfkit/constructions.hpp"

namespace hopfkit {

template <class K>
struct BaseAlgebra {
    AlgebraSC<K> a;    // A
    AlgebraSC<K> env;  // A^e, basis e_i (x) ebar_j at i*dim(A)+j
    LinMap<K> src;     // A -> A^e,   x |-> x (x) 1bar
    LinMap<K> tgt;     // A -> A^e,   x |-> 1 (x) xbar
};

template <class K>
BaseAlgebra<K> build_base(const AlgebraSC<K>& a) {
    if (!check_structure(a).pass())
        throw std::invalid_argument("build_base: base algebra does not verify");
    Index n = a.dim;
    BaseAlgebra<K> out;
    out.a = a;
    out.env.dim = n * n;
    out.env.mult = zeros<K>(n * n, n * n * n * n);
    // (x (x) sbar)(y (x) tbar) = xy (x) (ts)bar
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k2 = 0; k2 < n; ++k2)
                for (Index l = 0; l < n; ++l) {
                    Index col = (i * n + j) * n * n + (k2 * n + l);
                    for (Index m = 0; m < n; ++m) {
                        K xy = a.mult(m, i * n + k2);
                        if (xy == K(0)) continue;
                        for (Index p = 0; p < n; ++p) {
                            K ts = a.mult(p, l * n + j);
                            if (ts == K(0)) continue;
                            out.env.mult(m * n + p, col) = out.env.mult(m * n + p, col) + xy * ts;
                        }
                    }
                }
    out.env.unit = kron(a.unit, a.unit);
    out.src = zeros<K>(n * n, n);
    out.tgt = zeros<K>(n * n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            out.src(i * n + j, i) = a.unit(j, 0);
            out.tgt(i * n + j, j) = a.unit(i, 0);
        }
    return out;
}

template <class K>
struct BialgebroidSC {
    BaseAlgebra<K> base;
    Index h_dim = 0;
    LinMap<K> mult;         // h x h^2
    LinMap<K> eta;          // h x dim(A)^2, algebra map A^e -> H
    LinMap<K> comult_lift;  // h^2 x h, a lift of Delta into H (x) H
    LinMap<K> counit;       // dim(A) x h

    Index a_dim() const { return base.a.dim; }
    LinMap<K> unit_elt() const { return mul(eta, base.env.unit); }
};

// Degenerate base A = k: an ordinary bialgebra viewed as a bialgebroid.
template <class K>
BialgebroidSC<K> bialgebroid_from_bialgebra(const BialgebraSC<K>& b) {
    BialgebroidSC<K> out;
    out.base = build_base<K>({1, eye<K>(1), eye<K>(1)});
    out.h_dim = b.dim;
    out.mult = b.mult;
    out.eta = b.unit;
    out.comult_lift = b.comult;
    out.counit = b.counit;
    return out;
}

// The canonical Hopf algebroid H = A^e with Delta(a (x) bbar) =
// (a (x) 1bar) (x)_A (1 (x) bbar) and eps(a (x) bbar) = ab.
template <class K>
BialgebroidSC<K> enveloping_bialgebroid(const AlgebraSC<K>& a) {
    BialgebroidSC<K> out;
    out.base = build_base(a);
    out.h_dim = a.dim * a.dim;
    out.mult = out.base.env.mult;
    out.eta = eye<K>(a.dim * a.dim);
    out.comult_lift = kron(out.base.src, out.base.tgt);
    out.counit = a.mult;
    return out;
}

// Operator bundle derived from eta: left/right multiplications by source and
// target elements, as maps with an explicit A-leg.
template <class K>
struct AlgebroidOps {
    Index hd = 0, ad = 0;
    LinMap<K> lsrc;  // A (x) H -> H,  (a, h) |-> eta(a (x) 1bar) h
    LinMap<K> ltgt;  // A (x) H -> H,  (a, h) |-> eta(1 (x) abar) h
    LinMap<K> rsrc;  // H (x) A -> H,  (h, a) |-> h eta(a (x) 1bar)
    LinMap<K> rtgt;  // H (x) A -> H,  (h, a) |-> h eta(1 (x) abar)
};

template <class K>
AlgebroidOps<K> algebroid_ops(const BialgebroidSC<K>& b) {
    AlgebroidOps<K> out;
    out.hd = b.h_dim;
    out.ad = b.a_dim();
    LinMap<K> idh = eye<K>(out.hd);
    LinMap<K> es = mul(b.eta, b.base.src), et = mul(b.eta, b.base.tgt);
    out.lsrc = mul(b.mult, kron(es, idh));
    out.ltgt = mul(b.mult, kron(et, idh));
    out.rsrc = mul(b.mult, kron(idh, es));
    out.rtgt = mul(b.mult, kron(idh, et));
    return out;
}

// Quotient of H (x) H by the middle relations of |H (x)_A |H (equivalently
// the diamond space): eta(1 (x) abar) x (x) y  -  x (x) eta(a (x) 1bar) y.
template <class K>
Quotient<K> tensor_over_a(const BialgebroidSC<K>& b) {
    auto ops = algebroid_ops(b);
    LinMap<K> idh = eye<K>(b.h_dim);
    LinMap<K> rel = kron(ops.ltgt, idh) -
                    mul(kron(idh, ops.lsrc), kron(flip_map<K>(b.a_dim(), b.h_dim), idh));
    return make_quotient<K>(b.h_dim * b.h_dim, rel);
}

// x eta(1 (x) sbar) (x) y - x (x) eta(1 (x) sbar) y
template <class K>
Quotient<K> tensor_over_aop(const BialgebroidSC<K>& b) {
    auto ops = algebroid_ops(b);
    LinMap<K> idh = eye<K>(b.h_dim);
    LinMap<K> rel = kron(ops.rtgt, idh) - kron(idh, ops.ltgt);
    return make_quotient<K>(b.h_dim * b.h_dim, rel);
}

// x eta(r (x) 1bar) (x) y - x (x) eta(r (x) 1bar) y
template <class K>
Quotient<K> tensor_odot(const BialgebroidSC<K>& b) {
    auto ops = algebroid_ops(b);
    LinMap<K> idh = eye<K>(b.h_dim);
    LinMap<K> rel = kron(ops.rsrc, idh) - kron(idh, ops.lsrc);
    return make_quotient<K>(b.h_dim * b.h_dim, rel);
}

// Staged checker for Definition-style left bialgebroid axioms. Later stages
// evaluate composites through chosen lifts; their values are quotient
// invariants once the earlier stages pass, so failures are reported stage by
// stage in order.
template <class K>
Report check_bialgebroid(const BialgebroidSC<K>& b) {
    Report rep{"bialgebroid"};
    Index hd = b.h_dim, ad = b.a_dim();
    LinMap<K> idh = eye<K>(hd), ida = eye<K>(ad);
    LinMap<K> one = b.unit_elt();

    // stage 1: A^e-ring
    rep.merge(check_structure(b.base.a), "base");
    rep.merge(check_structure(b.base.env), "enveloping");
    rep.merge(check_structure(AlgebraSC<K>{hd, b.mult, one}), "ring");
    rep.add_eq("ring.eta.algebra-map", mul(b.eta, b.base.env.mult),
               mul(b.mult, kron(b.eta, b.eta)), {ad * ad, ad * ad});

    auto ops = algebroid_ops(b);
    Quotient<K> qa = tensor_over_a(b);
    LinMap<K> deltaq = mul(qa.proj, b.comult_lift);

    // stage 2: A|A-coring
    // bimodule structure on the quotient
    LinMap<K> lactq = mul(qa.proj, kron(ops.lsrc, idh), kron(ida, qa.sec));   // A (x) Q -> Q
    LinMap<K> ractq = mul(qa.proj, kron(idh, ops.ltgt), kron(idh, flip_map<K>(hd, ad)),
                          kron(qa.sec, ida));                                  // Q (x) A -> Q
    rep.add_eq("coring.delta.left-linear", mul(deltaq, ops.lsrc),
               mul(lactq, kron(ida, deltaq)), {ad, hd});
    rep.add_eq("coring.delta.right-linear", mul(deltaq, ops.ltgt),
               mul(ractq, flip_map<K>(ad, qa.dim), kron(ida, deltaq)), {ad, hd});
    rep.add_eq("coring.counit.bimodule",
               mul(b.counit, b.mult, kron(b.eta, idh)),
               mul(b.base.a.mult, kron(ida, b.base.a.mult),
                   kron(ida, flip_map<K>(ad, ad)), kron(ida, ida, b.counit)),
               {ad, ad, hd});
    // counit laws (EqCoun)
    rep.add_eq("coring.counit.left", mul(ops.lsrc, kron(b.counit, idh), b.comult_lift), idh, {hd});
    rep.add_eq("coring.counit.right",
               mul(ops.ltgt, flip_map<K>(hd, ad), kron(idh, b.counit), b.comult_lift), idh, {hd});
    // coassociativity in the triple quotient (EqDelAss)
    {
        Quotient<K> qaq = qa;  // same relations at each junction
        LinMap<K> rel3 = zeros<K>(hd * hd * hd, qaq.rel.cols() * hd * 2);
        rel3.leftCols(qaq.rel.cols() * hd) = kron(qaq.rel, idh);
        rel3.rightCols(qaq.rel.cols() * hd) = kron(idh, qaq.rel);
        Quotient<K> q3 = make_quotient<K>(hd * hd * hd, rel3);
        rep.add_eq("coring.coassociative",
                   mul(q3.proj, kron(b.comult_lift, idh), b.comult_lift),
                   mul(q3.proj, kron(idh, b.comult_lift), b.comult_lift), {hd});
    }
    // EqDelrs and EqCounrs
    rep.add_eq("coring.delta.right-Ae",
               mul(deltaq, b.mult, kron(idh, b.eta)),
               mul(qa.proj, kron(ops.rsrc, ops.rtgt), kron(idh, flip_map<K>(hd, ad), ida),
                   kron(b.comult_lift, ida, ida)),
               {hd, ad, ad});
    rep.add_eq("coring.counit.rs", mul(b.counit, ops.rsrc), mul(b.counit, ops.rtgt), {hd, ad});

    // stage 3: Takeuchi containment
    {
        bool ok = true;
        std::string wit;
        for (Index i = 0; i < ad && ok; ++i) {
            Vec<K> e = Vec<K>::Unit(ad, i);
            LinMap<K> ecol = e;
            LinMap<K> rt = mul(qa.proj, kron(mul(ops.rtgt, kron(idh, ecol)), idh), qa.sec);
            LinMap<K> ls = mul(qa.proj, kron(idh, mul(ops.rsrc, kron(idh, ecol))), qa.sec);
            auto w = first_difference(mul(rt, deltaq), mul(ls, deltaq), {hd});
            if (w) {
                ok = false;
                wit = "base element " + std::to_string(i) + ": " + w->str();
            }
        }
        rep.add("takeuchi.containment", ok, wit);
    }

    // stage 4: multiplicativity
    LinMap<K> multq = mul(qa.proj, tensor_algebra_mult(b.mult, hd, b.mult, hd),
                          kron(qa.sec, qa.sec));
    rep.add_eq("bialgebroid.delta.mult", mul(deltaq, b.mult), mul(multq, kron(deltaq, deltaq)),
               {hd, hd});
    rep.add_eq("bialgebroid.delta.unit", mul(deltaq, one), mul(qa.proj, kron(one, one)), {});
    rep.add_eq("bialgebroid.counit.unit", mul(b.counit, one), b.base.a.unit, {});
    {
        LinMap<K> eps_m = mul(b.counit, b.mult);
        LinMap<K> eps_src = mul(b.counit, ops.rsrc, kron(idh, b.counit));
        LinMap<K> eps_tgt = mul(b.counit, ops.rtgt, kron(idh, b.counit));
        rep.add_eq("bialgebroid.counit.mult.src", eps_m, eps_src, {hd, hd});
        rep.add_eq("bialgebroid.counit.mult.tgt", eps_m, eps_tgt, {hd, hd});
    }
    return rep;
}

template <class K>
struct HopfAlgebroidMaps {
    Quotient<K> q_diamond;   // codomain of beta and theta (= |H (x)_A |H)
    Quotient<K> q_aop;       // domain of beta
    Quotient<K> q_odot;      // domain of theta
    LinMap<K> beta, theta;   // on the quotient presentations
    bool beta_invertible = false, theta_invertible = false;
    LinMap<K> beta_translate;   // h^2 x h lift of beta^{-1}(b diamond 1)
    LinMap<K> theta_translate;  // h^2 x h lift of theta^{-1}(1 diamond b)
    Report report;
};

// beta(x (x) y) = x_(1) diamond x_(2) y and theta(x odot y) = x_(1) y diamond
// x_(2); well-definedness on the quotients is certified exactly, then
// invertibility is decided and the translate components are extracted.
template <class K>
HopfAlgebroidMaps<K> hopf_algebroid_maps(const BialgebroidSC<K>& b) {
    if (!check_bialgebroid(b).pass())
        throw std::invalid_argument("hopf_algebroid_maps: bialgebroid axioms do not verify");
    Index hd = b.h_dim;
    LinMap<K> idh = eye<K>(hd);
    HopfAlgebroidMaps<K> out;
    out.report.subject = "hopf-algebroid";
    out.q_diamond = tensor_over_a(b);
    out.q_aop = tensor_over_aop(b);
    out.q_odot = tensor_odot(b);

    LinMap<K> beta_full = mul(out.q_diamond.proj, kron(idh, b.mult), kron(b.comult_lift, idh));
    if (!is_zero(mul(beta_full, out.q_aop.rel)))
        throw std::logic_error("hopf_algebroid_maps: beta is not well-defined");
    out.beta = mul(beta_full, out.q_aop.sec);
    out.report.add("beta.well-defined", true, "");

    LinMap<K> theta_full = mul(out.q_diamond.proj, kron(b.mult, idh),
                               kron(idh, flip_map<K>(hd, hd)), kron(b.comult_lift, idh));
    if (!is_zero(mul(theta_full, out.q_odot.rel)))
        throw std::logic_error("hopf_algebroid_maps: theta is not well-defined");
    out.theta = mul(theta_full, out.q_odot.sec);
    out.report.add("theta.well-defined", true, "");

    LinMap<K> one = b.unit_elt();
    if (out.beta.rows() == out.beta.cols()) {
        auto inv = try_invert(out.beta);
        out.beta_invertible = inv.invertible();
        if (inv.invertible())
            out.beta_translate =
                mul(out.q_aop.sec, *inv.inverse, out.q_diamond.proj, kron(idh, one));
    }
    if (out.theta.rows() == out.theta.cols()) {
        auto inv = try_invert(out.theta);
        out.theta_invertible = inv.invertible();
        if (inv.invertible())
            out.theta_translate =
                mul(out.q_odot.sec, *inv.inverse, out.q_diamond.proj, kron(one, idh));
    }
    out.report.add("beta.invertible", out.beta_invertible, "");
    out.report.add("theta.invertible", out.theta_invertible, "");
    return out;
}

// A left H-module for the bialgebroid monad: the action factors through the
// boxtimes quotient automatically (associativity over eta), so only the
// module laws are verified.
template <class K>
struct AlgebroidModule {
    Index dim = 0;
    LinMap<K> action;  // h_dim * dim -> dim
};

template <class K>
Report check_algebroid_module(const BialgebroidSC<K>& b, const AlgebroidModule<K>& m) {
    Report rep{"algebroid-module"};
    Index hd = b.h_dim, n = m.dim;
    rep.add_eq("action.mult", mul(m.action, kron(b.mult, eye<K>(n))),
               mul(m.action, kron(eye<K>(hd), m.action)), {hd, hd, n});
    rep.add_eq("action.unit", mul(m.action, kron(b.unit_elt(), eye<K>(n))), eye<K>(n), {n});
    return rep;
}

template <class K>
AlgebroidModule<K> algebroid_regular_module(const BialgebroidSC<K>& b) {
    return {b.h_dim, b.mult};
}

// The base A as the trivial H-module: h |> a = eps(h eta(a (x) 1bar)).
template <class K>
AlgebroidModule<K> algebroid_trivial_module(const BialgebroidSC<K>& b) {
    auto ops = algebroid_ops(b);
    return {b.a_dim(), mul(b.counit, ops.rsrc)};
}

// Left/right A-actions on an H-module via eta.
template <class K>
LinMap<K> module_lact(const BialgebroidSC<K>& b, const AlgebroidModule<K>& m) {
    return mul(m.action, kron(mul(b.eta, b.base.src), eye<K>(m.dim)));
}

template <class K>
LinMap<K> module_ract(const BialgebroidSC<K>& b, const AlgebroidModule<K>& m) {
    // (m, a) |-> eta(1 (x) abar) |> m
    return mul(m.action, kron(mul(b.eta, b.base.tgt), eye<K>(m.dim)),
               flip_map<K>(m.dim, b.a_dim()));
}

namespace algdetail {

// Intertwiner basis of maps M -> N commuting with the given one-sided
// A-actions (bundled as A (x) M -> M after normalization).
template <class K>
std::vector<LinMap<K>> a_linear_maps(Index ad, Index mdim, Index ndim, const LinMap<K>& act_m,
                                     const LinMap<K>& act_n) {
    Index vars = ndim * mdim;
    LinMap<K> sys = zeros<K>(ndim * ad * mdim, vars);
    for (Index i = 0; i < ndim; ++i)
        for (Index a = 0; a < ad; ++a)
            for (Index j = 0; j < mdim; ++j) {
                Index row = (i * ad + a) * mdim + j;
                for (Index jp = 0; jp < mdim; ++jp)
                    sys(row, i * mdim + jp) = sys(row, i * mdim + jp) + act_m(jp, a * mdim + j);
                for (Index ip = 0; ip < ndim; ++ip)
                    sys(row, ip * mdim + j) = sys(row, ip * mdim + j) - act_n(i, a * ndim + ip);
            }
    std::vector<LinMap<K>> out;
    for (const auto& v : kernel_basis(sys)) {
        LinMap<K> f = zeros<K>(ndim, mdim);
        for (Index i = 0; i < ndim; ++i)
            for (Index j = 0; j < mdim; ++j) f(i, j) = v(i * mdim + j);
        out.push_back(std::move(f));
    }
    return out;
}

template <class K>
LinMap<K> basis_matrix(const std::vector<LinMap<K>>& basis) {
    if (basis.empty()) return zeros<K>(0, 0);
    Index rows = basis[0].rows() * basis[0].cols();
    LinMap<K> out = zeros<K>(rows, static_cast<Index>(basis.size()));
    for (Index j = 0; j < static_cast<Index>(basis.size()); ++j)
        for (Index r = 0; r < basis[j].rows(); ++r)
            for (Index c = 0; c < basis[j].cols(); ++c)
                out(r * basis[j].cols() + c, j) = basis[j](r, c);
    return out;
}

template <class K>
std::optional<Vec<K>> coords(const LinMap<K>& basis_mat, const LinMap<K>& f) {
    Vec<K> v = Vec<K>::Constant(f.rows() * f.cols(), K(0));
    for (Index r = 0; r < f.rows(); ++r)
        for (Index c = 0; c < f.cols(); ++c) v(r * f.cols() + c) = f(r, c);
    return solve<K>(basis_mat, v);
}

// Expands a lifted tensor column (in H (x) H coordinates) into (u, v, coef)
// triples; used to apply translate components elementwise.
template <class K>
std::vector<std::tuple<Index, Index, K>> pairs_of(const LinMap<K>& col, Index hd) {
    std::vector<std::tuple<Index, Index, K>> out;
    for (Index u = 0; u < hd; ++u)
        for (Index v = 0; v < hd; ++v) {
            K c = col(u * hd + v, 0);
            if (!(c == K(0))) out.emplace_back(u, v, c);
        }
    return out;
}

}  // namespace algdetail

// Closed-structure actions of a Hopf algebroid on hom spaces:
// b . f = b_(+) |> f(b_(-) |> -) on right-A-linear maps (via beta), and the
// analogous theta-component action on left-A-linear maps. Each is certified
// to close into the hom space and to satisfy the module laws there.
template <class K>
Report algebroid_closed_actions_check(const BialgebroidSC<K>& b, const HopfAlgebroidMaps<K>& maps,
                                      const AlgebroidModule<K>& m, const AlgebroidModule<K>& n) {
    Report rep{"algebroid-closed-actions"};
    if (!maps.beta_invertible || !maps.theta_invertible)
        throw std::invalid_argument("algebroid_closed_actions_check: beta/theta not invertible");
    if (!check_algebroid_module(b, m).pass() || !check_algebroid_module(b, n).pass())
        throw std::invalid_argument("algebroid_closed_actions_check: modules do not verify");
    Index hd = b.h_dim, ad = b.a_dim();

    struct Side {
        const char* name;
        const LinMap<K>* translate;
        LinMap<K> am, an;  // the one-sided A-actions cut out by the hom space
    };
    LinMap<K> r_m = module_ract(b, m), r_n = module_ract(b, n);
    LinMap<K> l_m = module_lact(b, m), l_n = module_lact(b, n);
    // normalize right actions to A (x) M -> M for the intertwiner solver
    LinMap<K> rm_n = mul(r_m, flip_map<K>(ad, m.dim));
    LinMap<K> rn_n = mul(r_n, flip_map<K>(ad, n.dim));
    std::vector<Side> sides = {{"homA", &maps.beta_translate, rm_n, rn_n},
                               {"ahom", &maps.theta_translate, l_m, l_n}};
    for (auto& side : sides) {
        auto basis = algdetail::a_linear_maps<K>(ad, m.dim, n.dim, side.am, side.an);
        Index k = static_cast<Index>(basis.size());
        LinMap<K> bas = algdetail::basis_matrix(basis);
        std::vector<LinMap<K>> rho(hd);
        bool closes = true;
        for (Index e = 0; e < hd && closes; ++e) {
            LinMap<K> tcol = mul(*side.translate, LinMap<K>(Vec<K>::Unit(hd, e)));
            auto prs = algdetail::pairs_of(tcol, hd);
            rho[e] = zeros<K>(k, k);
            for (Index j = 0; j < k && closes; ++j) {
                LinMap<K> img = zeros<K>(n.dim, m.dim);
                for (auto& [u, v, c] : prs) {
                    LinMap<K> au = act(n.action, Vec<K>(Vec<K>::Unit(hd, u)), n.dim);
                    LinMap<K> av = act(m.action, Vec<K>(Vec<K>::Unit(hd, v)), m.dim);
                    LinMap<K> term = mul(au, basis[j], av);
                    for (Index r = 0; r < n.dim; ++r)
                        for (Index cc = 0; cc < m.dim; ++cc)
                            img(r, cc) = img(r, cc) + c * term(r, cc);
                }
                auto co = algdetail::coords(bas, img);
                if (!co) { closes = false; break; }
                rho[e].col(j) = *co;
            }
        }
        rep.add(std::string(side.name) + ".closes-into-hom", closes, "");
        if (!closes) continue;
        // module laws in coordinates
        bool assoc = true;
        for (Index x = 0; x < hd && assoc; ++x)
            for (Index y = 0; y < hd && assoc; ++y) {
                LinMap<K> lhs = mul(rho[x], rho[y]);
                LinMap<K> rhs = zeros<K>(k, k);
                for (Index t = 0; t < hd; ++t) {
                    K c = b.mult(t, x * hd + y);
                    if (c == K(0)) continue;
                    for (Index r = 0; r < k; ++r)
                        for (Index cc = 0; cc < k; ++cc) rhs(r, cc) = rhs(r, cc) + c * rho[t](r, cc);
                }
                assoc = maps_equal(lhs, rhs);
            }
        rep.add(std::string(side.name) + ".action.mult", assoc, "");
        LinMap<K> one = b.unit_elt();
        LinMap<K> rho_one = zeros<K>(k, k);
        for (Index t = 0; t < hd; ++t) {
            K c = one(t, 0);
            if (c == K(0)) continue;
            for (Index r = 0; r < k; ++r)
                for (Index cc = 0; cc < k; ++cc) rho_one(r, cc) = rho_one(r, cc) + c * rho[t](r, cc);
        }
        rep.add_eq(std::string(side.name) + ".action.unit", rho_one, eye<K>(k));
    }
    return rep;
}

template <class K>
struct AlgebroidCCC {
    Quotient<K> q;       // C = H / left ideal {h(a - abar)}
    LinMap<K> comult;    // C -> C (x)_A C (on the quotient presentations)
    LinMap<K> counit;    // C -> A
    Quotient<K> q_cc;    // C (x)_A C
    LinMap<K> braiding;  // C (x)_A M -> M (x)_A C on quotient presentations
    Quotient<K> q_cm, q_mc;
    Report report;
};

// The induced coalgebra H boxtimes A and its lax braiding
//   (h boxtimes 1) (x) m |-> (h_(+)(1) h_(-)) |> m (x) (h_(+)(2) boxtimes 1)
// against a probe module, all with exact descent certificates.
template <class K>
AlgebroidCCC<K> algebroid_induced_ccc(const BialgebroidSC<K>& b, const HopfAlgebroidMaps<K>& maps,
                                      const AlgebroidModule<K>& probe) {
    AlgebroidCCC<K> out;
    out.report.subject = "algebroid-ccc";
    Index hd = b.h_dim, ad = b.a_dim(), md = probe.dim;
    LinMap<K> idh = eye<K>(hd);
    auto ops = algebroid_ops(b);

    // C = H / H.{a - abar}
    LinMap<K> diff = mul(b.eta, LinMap<K>(b.base.src - b.base.tgt));  // h x a
    LinMap<K> ideal = mul(b.mult, kron(idh, diff));                   // H (x) A -> H
    out.q = make_quotient<K>(hd, ideal);
    Index cd = out.q.dim;

    // A-bimodule structure descends (left multiplications preserve the ideal)
    LinMap<K> lsrc_c = mul(out.q.proj, ops.lsrc, kron(eye<K>(ad), out.q.sec));
    LinMap<K> ltgt_c = mul(out.q.proj, ops.ltgt, kron(eye<K>(ad), out.q.sec));
    out.report.add("bimodule.descends",
                   is_zero(mul(out.q.proj, ops.lsrc, kron(eye<K>(ad), ideal))) &&
                       is_zero(mul(out.q.proj, ops.ltgt, kron(eye<K>(ad), ideal))),
                   "");

    // C (x)_A C: (c . a) (x) c' - c (x) (a . c')   with . the descended actions
    LinMap<K> rel_cc = kron(ltgt_c, eye<K>(cd)) -
                       mul(kron(eye<K>(cd), lsrc_c), kron(flip_map<K>(ad, cd), eye<K>(cd)));
    out.q_cc = make_quotient<K>(cd * cd, rel_cc);

    LinMap<K> delta_desc = mul(out.q_cc.proj, kron(out.q.proj, out.q.proj), b.comult_lift);
    if (!is_zero(mul(delta_desc, ideal)))
        throw std::logic_error("algebroid_induced_ccc: comultiplication does not descend");
    if (!is_zero(mul(b.counit, ideal)))
        throw std::logic_error("algebroid_induced_ccc: counit does not descend");
    out.comult = mul(delta_desc, out.q.sec);
    out.counit = mul(b.counit, out.q.sec);
    out.report.add("coalgebra.descends", true, "");

    // braiding on the probe: domain C (x)_A M, codomain M (x)_A C
    LinMap<K> lact_m = mul(probe.action, kron(mul(b.eta, b.base.src), eye<K>(md)));
    LinMap<K> ract_m = mul(probe.action, kron(mul(b.eta, b.base.tgt), eye<K>(md)));
    LinMap<K> rel_cm = kron(ltgt_c, eye<K>(md)) -
                       mul(kron(eye<K>(cd), lact_m), kron(flip_map<K>(ad, cd), eye<K>(md)));
    out.q_cm = make_quotient<K>(cd * md, rel_cm);
    LinMap<K> rel_mc = kron(mul(ract_m, flip_map<K>(md, ad)), eye<K>(cd)) -
                       kron(eye<K>(md), lsrc_c);
    out.q_mc = make_quotient<K>(md * cd, rel_mc);

    // tau on the H (x) M lift: h (x) m |-> (h+(1) h-)|>m (x) (h+(2) boxtimes 1)
    LinMap<K> tau_lift = mul(kron(probe.action, out.q.proj),
                             kron(idh, flip_map<K>(hd, md)),
                             kron(b.mult, idh, eye<K>(md)),
                             kron(idh, flip_map<K>(hd, hd), eye<K>(md)),
                             kron(b.comult_lift, idh, eye<K>(md)),
                             kron(maps.beta_translate, eye<K>(md)));
    LinMap<K> tau_q = mul(out.q_mc.proj, tau_lift);
    // descent: the C-ideal in the first slot and the middle-A relations,
    // both expressed on the H (x) M lift with domain ordering (h, a, m)
    if (!is_zero(mul(tau_q, kron(ideal, eye<K>(md)))))
        throw std::logic_error("algebroid_induced_ccc: braiding does not descend to H boxtimes A");
    LinMap<K> mid = kron(mul(ops.ltgt, flip_map<K>(hd, ad)), eye<K>(md)) - kron(idh, lact_m);
    if (!is_zero(mul(tau_q, mid)))
        throw std::logic_error("algebroid_induced_ccc: braiding not defined on the A-relative tensor");
    out.braiding = mul(tau_q, kron(out.q.sec, eye<K>(md)), out.q_cm.sec);
    out.report.add("braiding.well-defined", true, "");

    // bimodule morphism property of the braiding
    LinMap<K> l_cm = mul(out.q_cm.proj, kron(lsrc_c, eye<K>(md)), kron(eye<K>(ad), out.q_cm.sec));
    LinMap<K> r_cm = mul(out.q_cm.proj, kron(eye<K>(cd), mul(ract_m, flip_map<K>(md, ad))),
                         kron(out.q_cm.sec, eye<K>(ad)));
    LinMap<K> l_mc = mul(out.q_mc.proj, kron(lact_m, eye<K>(cd)), kron(eye<K>(ad), out.q_mc.sec));
    LinMap<K> r_mc = mul(out.q_mc.proj, kron(eye<K>(md), ltgt_c), kron(eye<K>(md), flip_map<K>(cd, ad)),
                         kron(out.q_mc.sec, eye<K>(ad)));
    out.report.add_eq("braiding.left-linear", mul(out.braiding, l_cm),
                      mul(l_mc, kron(eye<K>(ad), out.braiding)), {ad, out.q_cm.dim});
    out.report.add_eq("braiding.right-linear", mul(out.braiding, r_cm),
                      mul(r_mc, kron(out.braiding, eye<K>(ad))), {out.q_cm.dim, ad});
    return out;
}

// Braided Hopf object in Yetter-Drinfeld modules over a Hopf algebroid,
// supplied with explicit lifts for the maps landing in relative tensors.
template <class K>
struct AlgebroidYDHopf {
    Index dim = 0;          // k-dimension of B
    LinMap<K> action;       // H (x) B -> B
    LinMap<K> coaction;     // B -> H (x) B (lift into |H (x)_A B)
    LinMap<K> mult;         // B (x) B -> B (defined on the lift of B (x)_A B)
    LinMap<K> unit;         // A -> B
    LinMap<K> comult;       // B -> B (x) B (lift into B (x)_A B)
    LinMap<K> counit;       // B -> A
    LinMap<K> antipode;     // B -> B
};

template <class K>
Report check_algebroid_braided_hopf(const BialgebroidSC<K>& h, const AlgebroidYDHopf<K>& a) {
    Report rep{"algebroid-braided-hopf"};
    Index hd = h.h_dim, ad = h.a_dim(), n = a.dim;
    LinMap<K> idh = eye<K>(hd), idn = eye<K>(n), ida = eye<K>(ad);
    auto ops = algebroid_ops(h);
    rep.merge(check_algebroid_module(h, AlgebroidModule<K>{n, a.action}), "module");

    LinMap<K> lact = mul(a.action, kron(mul(h.eta, h.base.src), idn));  // A (x) B -> B
    LinMap<K> ract = mul(a.action, kron(mul(h.eta, h.base.tgt), idn));  // A (x) B -> B (right)

    // |H (x)_A B
    LinMap<K> rel_hb = kron(ops.ltgt, idn) -
                       mul(kron(idh, lact), kron(flip_map<K>(ad, hd), idn));
    Quotient<K> q_hb = make_quotient<K>(hd * n, rel_hb);
    LinMap<K> deltaq = mul(q_hb.proj, a.coaction);
    // comodule laws
    rep.add_eq("comodule.counit", mul(lact, kron(h.counit, idn), a.coaction), idn, {n});
    {
        LinMap<K> rel3 = zeros<K>(hd * hd * n, tensor_over_a(h).rel.cols() * n + hd * rel_hb.cols());
        Quotient<K> qa = tensor_over_a(h);
        rel3.leftCols(qa.rel.cols() * n) = kron(qa.rel, idn);
        rel3.rightCols(hd * rel_hb.cols()) = kron(idh, rel_hb);
        Quotient<K> q3 = make_quotient<K>(hd * hd * n, rel3);
        rep.add_eq("comodule.coassociative",
                   mul(q3.proj, kron(h.comult_lift, idn), a.coaction),
                   mul(q3.proj, kron(idh, a.coaction), a.coaction), {n});
    }
    // Takeuchi: u eta(1 (x) abar) (x) x == u (x) (x . a)
    {
        bool ok = true;
        for (Index i = 0; i < ad && ok; ++i) {
            LinMap<K> ecol = LinMap<K>(Vec<K>::Unit(ad, i));
            LinMap<K> rt = mul(q_hb.proj, kron(mul(ops.rtgt, kron(idh, ecol)), idn), q_hb.sec);
            LinMap<K> rb = mul(q_hb.proj, kron(idh, mul(ract, kron(ecol, idn))), q_hb.sec);
            if (!maps_equal(mul(rt, deltaq), mul(rb, deltaq))) ok = false;
        }
        rep.add("comodule.takeuchi", ok, "");
    }
    // Yetter-Drinfeld compatibility in |H (x)_A B
    {
        LinMap<K> lhs = mul(q_hb.proj, kron(h.mult, a.action), kron(idh, flip_map<K>(hd, hd), idn),
                            kron(h.comult_lift, a.coaction));
        LinMap<K> rhs = mul(q_hb.proj, kron(h.mult, idn), kron(idh, flip_map<K>(n, hd)),
                            kron(mul(a.coaction, a.action), idh), kron(idh, flip_map<K>(hd, n)),
                            kron(h.comult_lift, idn));
        rep.add_eq("yd.compatibility", lhs, rhs, {hd, n});
    }

    // B (x)_A B and the braided structure
    // relations in ordering (x, a, y): (x . a) (x) y - x (x) (a . y)
    LinMap<K> rel_bb = kron(mul(ract, flip_map<K>(n, ad)), idn) - kron(idn, lact);
    Quotient<K> q_bb = make_quotient<K>(n * n, rel_bb);
    if (!is_zero(mul(a.mult, rel_bb)))
        throw std::logic_error("algebroid braided hopf: multiplication not defined over (x)_A");
    rep.add("mult.relative.well-defined", true, "");
    LinMap<K> comultq = mul(q_bb.proj, a.comult);

    // algebra laws over A: associativity on the lift, unit as an A-map
    rep.add_eq("algebra.assoc", mul(a.mult, kron(a.mult, idn)), mul(a.mult, kron(idn, a.mult)),
               {n, n, n});
    rep.add_eq("algebra.unit.left", mul(a.mult, kron(mul(a.unit, h.base.a.unit), idn)), idn, {n});
    rep.add_eq("algebra.unit.right", mul(a.mult, kron(idn, mul(a.unit, h.base.a.unit))), idn, {n});
    rep.add_eq("algebra.unit.a-bimodule", mul(a.mult, kron(a.unit, idn)), lact, {ad, n});

    // coalgebra laws in relative tensors
    rep.add_eq("coalgebra.counit.left", mul(lact, kron(a.counit, idn), a.comult), idn, {n});
    rep.add_eq("coalgebra.counit.right",
               mul(ract, flip_map<K>(n, ad), kron(idn, a.counit), a.comult), idn, {n});
    {
        LinMap<K> rel3 = zeros<K>(n * n * n, rel_bb.cols() * n * 2);
        rel3.leftCols(rel_bb.cols() * n) = kron(rel_bb, idn);
        rel3.rightCols(rel_bb.cols() * n) = kron(idn, rel_bb);
        Quotient<K> q3 = make_quotient<K>(n * n * n, rel3);
        rep.add_eq("coalgebra.coassociative", mul(q3.proj, kron(a.comult, idn), a.comult),
                   mul(q3.proj, kron(idn, a.comult), a.comult), {n});
    }

    // H-linearity and H-colinearity of the structure maps
    LinMap<K> act_bb = mul(kron(a.action, a.action), kron(idh, flip_map<K>(hd, n), idn),
                           kron(h.comult_lift, idn, idn));  // H (x) B (x) B -> B (x) B (lift)
    rep.add_eq("mult.linear", mul(a.mult, act_bb), mul(a.action, kron(idh, a.mult)), {hd, n, n});
    LinMap<K> act_a = mul(h.counit, ops.rsrc);  // H (x) A -> A, trivial module
    rep.add_eq("unit.linear", mul(a.action, kron(idh, a.unit)), mul(a.unit, act_a), {hd, ad});
    rep.add_eq("comult.linear", mul(q_bb.proj, a.comult, a.action),
               mul(q_bb.proj, act_bb, kron(idh, a.comult)), {hd, n});
    rep.add_eq("counit.linear", mul(a.counit, a.action), mul(act_a, kron(idh, a.counit)), {hd, n});
    rep.add_eq("antipode.linear", mul(a.antipode, a.action), mul(a.action, kron(idh, a.antipode)),
               {hd, n});

    // colinearity of mult and comult in |H (x)_A (B (x)_A B)
    {
        LinMap<K> co_bb = mul(kron(h.mult, idn, idn), kron(idh, flip_map<K>(n, hd), idn),
                              kron(a.coaction, a.coaction));  // lift of the tensor coaction
        LinMap<K> relq = zeros<K>(hd * n * n, rel_hb.cols() * n + hd * rel_bb.cols());
        relq.leftCols(rel_hb.cols() * n) = kron(rel_hb, idn);
        relq.rightCols(hd * rel_bb.cols()) = kron(idh, rel_bb);
        Quotient<K> q_hbb = make_quotient<K>(hd * n * n, relq);
        rep.add_eq("mult.colinear", mul(q_hb.proj, a.coaction, a.mult),
                   mul(q_hb.proj, kron(idh, a.mult), co_bb), {n, n});
        rep.add_eq("comult.colinear", mul(q_hbb.proj, co_bb, a.comult),
                   mul(q_hbb.proj, kron(idh, a.comult), a.coaction), {n});
    }
    rep.add_eq("unit.colinear", mul(q_hb.proj, a.coaction, a.unit),
               mul(q_hb.proj, kron(mul(h.eta, h.base.src), a.unit),
                   kron(ida, h.base.a.unit)),
               {ad});
    rep.add_eq("counit.colinear",
               mul(ops.ltgt, flip_map<K>(hd, ad), kron(idh, a.counit), a.coaction),
               mul(mul(h.eta, h.base.src), a.counit), {n});

    // braided bialgebra axiom with tau(x (x) y) = x_(-1) |> y (x) x_(0)
    LinMap<K> tau = mul(kron(a.action, idn), kron(idh, flip_map<K>(n, n)), kron(a.coaction, idn));
    rep.add_eq("braided.comult.mult", mul(q_bb.proj, a.comult, a.mult),
               mul(q_bb.proj, kron(a.mult, a.mult), kron(idn, tau, idn), kron(a.comult, a.comult)),
               {n, n});
    rep.add_eq("braided.counit.mult", mul(a.counit, a.mult),
               mul(a.counit, ract, flip_map<K>(n, ad), kron(idn, a.counit)), {n, n});
    // antipode identities: m(S (x) id)Delta = unit . counit = m(id (x) S)Delta
    LinMap<K> target = mul(a.unit, a.counit);
    rep.add_eq("antipode.left", mul(a.mult, kron(a.antipode, idn), a.comult), target, {n});
    rep.add_eq("antipode.right", mul(a.mult, kron(idn, a.antipode), a.comult), target, {n});
    return rep;
}

// Cross product B x| H on B (x)_A sH: smash algebra, coaction-twisted
// coproduct, and base actions through the first leg. The result is returned
// as a BialgebroidSC on the quotient presentation and must pass
// check_bialgebroid and both invertibility verdicts (asserted by callers via
// the acceptance suite; the construction itself re-checks the axioms).
template <class K>
BialgebroidSC<K> algebroid_cross_product(const BialgebroidSC<K>& h, const HopfAlgebroidMaps<K>& maps,
                                         const AlgebroidYDHopf<K>& bdat) {
    if (!maps.beta_invertible)
        throw std::invalid_argument("algebroid_cross_product: parent is not left Hopf");
    if (!check_algebroid_braided_hopf(h, bdat).pass())
        throw std::invalid_argument("algebroid_cross_product: braided Hopf data does not verify");
    Index hd = h.h_dim, ad = h.a_dim(), n = bdat.dim;
    LinMap<K> idh = eye<K>(hd), idn = eye<K>(n);
    auto ops = algebroid_ops(h);
    LinMap<K> lact = mul(bdat.action, kron(mul(h.eta, h.base.src), idn));
    LinMap<K> ract = mul(bdat.action, kron(mul(h.eta, h.base.tgt), idn));

    // B (x)_A sH: (x . a) (x) h - x (x) eta(a (x) 1bar) h, ordering (x, a, h)
    LinMap<K> rel = kron(mul(ract, flip_map<K>(n, ad)), idh) - kron(idn, ops.lsrc);
    Quotient<K> q = make_quotient<K>(n * hd, rel);

    // total multiplication on the lift: (b, h, b', h') -> b (h1 |> b') (x) h2 h'
    LinMap<K> mult_lift = mul(kron(bdat.mult, idh),
                              kron(idn, bdat.action, h.mult),
                              kron(idn, idh, flip_map<K>(hd, n), idh),
                              kron(idn, h.comult_lift, idn, idh));

    BialgebroidSC<K> out;
    out.base = h.base;
    out.h_dim = q.dim;
    out.mult = mul(q.proj, mult_lift, kron(q.sec, q.sec));
    // eta(a (x) a'bar) = (a |> 1_B) (x) eta(1 (x) a'bar)
    LinMap<K> unit_b = mul(bdat.unit, h.base.a.unit);
    LinMap<K> lift_unit = mul(lact, kron(eye<K>(ad), unit_b));  // A -> B, a |-> a |> 1_B
    out.eta = mul(q.proj, kron(lift_unit, mul(h.eta, h.base.tgt)));
    // coproduct lift: (b, h) -> (b1, b2(-1) h1) (x) (b2(0), h2)
    LinMap<K> comult_lift_total = mul(kron(idn, h.mult, idn, idh),
                                      kron(idn, idh, flip_map<K>(n, hd), idh),
                                      kron(idn, bdat.coaction, idh, idh),
                                      kron(bdat.comult, h.comult_lift));
    out.comult_lift = mul(kron(q.proj, q.proj), comult_lift_total, q.sec);
    // counit(b (x) h) = eps_B(b) eps_H(h)
    out.counit = mul(h.base.a.mult, kron(bdat.counit, h.counit), q.sec);

    if (!check_bialgebroid(out).pass())
        throw std::logic_error("algebroid_cross_product: result fails the bialgebroid axioms");
    return out;
}

template <class K>
struct AlgebroidHopfModule {
    AlgebroidModule<K> module;
    LinMap<K> coaction_lift;  // M -> H (x) M, lift of M -> (H boxtimes A) (x)_A M
};

template <class K>
struct AlgebroidHopfModuleReport {
    Report report;
    Index coinvariant_dim = 0;
    LinMap<K> coinvariants;
};

// Hopf-module compatibility over a Hopf algebroid, coinvariants as the
// equalizer of the coaction against pi(1) (x) -, and bijectivity of the
// canonical map H boxtimes coinv -> M.
template <class K>
AlgebroidHopfModuleReport<K> algebroid_hopf_module_check(const BialgebroidSC<K>& b,
                                                         const HopfAlgebroidMaps<K>& maps,
                                                         const AlgebroidHopfModule<K>& hm) {
    if (!maps.beta_invertible || !maps.theta_invertible)
        throw std::invalid_argument("algebroid_hopf_module_check: parent is not Hopf");
    AlgebroidHopfModuleReport<K> out;
    out.report.subject = "algebroid-hopf-module";
    Index hd = b.h_dim, ad = b.a_dim(), md = hm.module.dim;
    LinMap<K> idh = eye<K>(hd), idm = eye<K>(md);
    auto ops = algebroid_ops(b);
    out.report.merge(check_algebroid_module(b, hm.module), "module");

    // C = H boxtimes A and the quotient C (x)_A M
    LinMap<K> diff = mul(b.eta, LinMap<K>(b.base.src - b.base.tgt));
    LinMap<K> ideal = mul(b.mult, kron(idh, diff));
    Quotient<K> qc = make_quotient<K>(hd, ideal);
    LinMap<K> lact_m = mul(hm.module.action, kron(mul(b.eta, b.base.src), idm));
    LinMap<K> ltgt_c = mul(qc.proj, ops.ltgt, kron(eye<K>(ad), qc.sec));
    LinMap<K> rel_cm = kron(ltgt_c, idm) -
                       mul(kron(eye<K>(qc.dim), lact_m), kron(flip_map<K>(ad, qc.dim), idm));
    Quotient<K> qcm = make_quotient<K>(qc.dim * md, rel_cm);

    LinMap<K> deltaq = mul(qcm.proj, kron(qc.proj, idm), hm.coaction_lift);

    // comodule laws: counit and coassociativity are subsumed by compatibility
    // with the regular structure in the acceptance paths; here certify the
    // counit law and the Hopf-module compatibility.
    out.report.add_eq("coaction.counit", mul(lact_m, kron(b.counit, idm), hm.coaction_lift), idm,
                      {md});
    {
        LinMap<K> lhs = mul(deltaq, hm.module.action);
        LinMap<K> rhs = mul(qcm.proj, kron(mul(qc.proj, b.mult), hm.module.action),
                            kron(idh, flip_map<K>(hd, hd), idm),
                            kron(b.comult_lift, hm.coaction_lift));
        out.report.add_eq("hopf-module.compatibility", lhs, rhs, {hd, md});
    }

    // coinvariants: ker(deltaq - pi(1) (x) -)
    LinMap<K> pi1 = mul(qc.proj, b.unit_elt());
    LinMap<K> gap = deltaq - mul(qcm.proj, kron(pi1, idm));
    out.coinvariants = kernel_matrix(gap);
    out.coinvariant_dim = out.coinvariants.cols();

    // canonical map H boxtimes V -> M for V the coinvariants
    Index vd = out.coinvariant_dim;
    LinMap<K> incl = out.coinvariants;
    LinMap<K> lact_v = mul(lact_m, kron(eye<K>(ad), incl));
    LinMap<K> ract_v = mul(hm.module.action, kron(mul(b.eta, b.base.tgt), incl));
    auto lv = solve_matrix(incl, lact_v);   // A (x) V -> V in V coordinates
    auto rv = solve_matrix(incl, ract_v);
    bool closed = lv.has_value() && rv.has_value();
    out.report.add("coinvariants.a-bimodule", closed, "");
    if (closed) {
        // H boxtimes V: h eta(r (x) sbar) (x) v - h (x) r|>(s.v), ordering (h, r, s, v)
        LinMap<K> bimod = mul(*lv, kron(eye<K>(ad), *rv));  // (r, s, v) -> r |> (v <| s)
        LinMap<K> relq = kron(mul(b.mult, kron(idh, b.eta)), eye<K>(vd)) - kron(idh, bimod);
        Quotient<K> qhv = make_quotient<K>(hd * vd, relq);
        LinMap<K> canon_lift = mul(hm.module.action, kron(idh, incl));
        if (!is_zero(mul(canon_lift, qhv.rel)))
            throw std::logic_error("algebroid_hopf_module_check: canonical map not defined on boxtimes");
        LinMap<K> canonical = mul(canon_lift, qhv.sec);
        bool bij = canonical.rows() == canonical.cols() && try_invert(canonical).invertible();
        out.report.add("canonical.bijective", bij,
                       bij ? "" : "H boxtimes coinv -> M is not a bijection");
    }
    return out;
}

}  // namespace hopfkit
