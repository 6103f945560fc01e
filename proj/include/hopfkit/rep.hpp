#pragma once

// Modules, comodules, Yetter-Drinfeld and Hopf modules over structure-constant
// bialgebras, with their axiom checkers, tensor products, braidings,
// coinvariants, the Fundamental-Theorem verifier and cocommutative cotensors.

#include "hopfkit/structures.hpp"

namespace hopfkit {

template <class K>
struct ModuleRep {
    BialgebraSC<K> parent;
    Index dim = 0;
    LinMap<K> action;  // dim x (parent.dim * dim)
};

template <class K>
struct ComoduleRep {
    CoalgebraSC<K> parent;
    Index dim = 0;
    LinMap<K> coaction;  // (parent.dim * dim) x dim
};

template <class K>
struct YDRep {
    HopfSC<K> parent;
    Index dim = 0;
    LinMap<K> action;    // dim x (parent.dim * dim)
    LinMap<K> coaction;  // (parent.dim * dim) x dim
};

template <class K>
struct HopfModuleRep {
    BialgebraSC<K> parent;
    Index dim = 0;
    LinMap<K> action;
    LinMap<K> coaction;
};

template <class K>
ModuleRep<K> regular_module(const BialgebraSC<K>& b) {
    return {b, b.dim, b.mult};
}

template <class K>
ModuleRep<K> trivial_module(const BialgebraSC<K>& b, Index n = 1) {
    return {b, n, kron(b.counit, eye<K>(n))};
}

template <class K>
ComoduleRep<K> free_comodule(const CoalgebraSC<K>& c, Index n = 1) {
    return {c, c.dim * n, kron(c.comult, eye<K>(n))};
}

// Free Hopf module B (x) V: action mult (x) id, coaction comult (x) id.
template <class K>
HopfModuleRep<K> free_hopf_module(const BialgebraSC<K>& b, Index n = 1) {
    return {b, b.dim * n, kron(b.mult, eye<K>(n)), kron(b.comult, eye<K>(n))};
}

// Matrix of the action of a single algebra element on a module.
template <class K>
LinMap<K> act(const LinMap<K>& action, const Vec<K>& element, Index mod_dim) {
    LinMap<K> col = element;
    return mul(action, kron(col, eye<K>(mod_dim)));
}

template <class K>
Report check_representation(const ModuleRep<K>& m) {
    Report rep{"module"};
    Index d = m.parent.dim, n = m.dim;
    if (m.action.rows() != n || m.action.cols() != d * n)
        throw std::invalid_argument("module: action has wrong shape");
    rep.add_eq("action.mult", mul(m.action, kron(m.parent.mult, eye<K>(n))),
               mul(m.action, kron(eye<K>(d), m.action)), {d, d, n});
    rep.add_eq("action.unit", mul(m.action, kron(m.parent.unit, eye<K>(n))), eye<K>(n), {n});
    return rep;
}

template <class K>
Report check_representation(const ComoduleRep<K>& m) {
    Report rep{"comodule"};
    Index d = m.parent.dim, n = m.dim;
    if (m.coaction.rows() != d * n || m.coaction.cols() != n)
        throw std::invalid_argument("comodule: coaction has wrong shape");
    rep.add_eq("coaction.comult", mul(kron(m.parent.comult, eye<K>(n)), m.coaction),
               mul(kron(eye<K>(d), m.coaction), m.coaction), {n});
    rep.add_eq("coaction.counit", mul(kron(m.parent.counit, eye<K>(n)), m.coaction), eye<K>(n), {n});
    return rep;
}

// Yetter-Drinfeld compatibility with the flip braiding:
//   h_(1) x_(-1) (x) h_(2) |> x_(0)  =  (h_(1) |> x)_(-1) h_(2) (x) (h_(1) |> x)_(0)
template <class K>
Report check_representation(const YDRep<K>& y) {
    Report rep{"yetter-drinfeld"};
    const BialgebraSC<K>& b = y.parent.b;
    Index d = b.dim, n = y.dim;
    rep.merge(check_representation(ModuleRep<K>{b, n, y.action}), "module");
    rep.merge(check_representation(ComoduleRep<K>{b.coalgebra(), n, y.coaction}), "comodule");
    LinMap<K> id = eye<K>(d), idm = eye<K>(n);
    LinMap<K> lhs = mul(kron(b.mult, y.action), kron(id, flip_map<K>(d, d), idm),
                        kron(b.comult, y.coaction));
    LinMap<K> rhs = mul(kron(b.mult, idm), kron(id, flip_map<K>(n, d)),
                        kron(mul(y.coaction, y.action), id), kron(id, flip_map<K>(d, n)),
                        kron(b.comult, idm));
    rep.add_eq("yd.compatibility", lhs, rhs, {d, n});
    return rep;
}

// Hopf-module compatibility: delta.r = (m (x) r)(id (x) Psi (x) id)(Delta (x) delta).
template <class K>
Report check_representation(const HopfModuleRep<K>& h) {
    Report rep{"hopf-module"};
    const BialgebraSC<K>& b = h.parent;
    Index d = b.dim, n = h.dim;
    rep.merge(check_representation(ModuleRep<K>{b, n, h.action}), "module");
    rep.merge(check_representation(ComoduleRep<K>{b.coalgebra(), n, h.coaction}), "comodule");
    LinMap<K> lhs = mul(h.coaction, h.action);
    LinMap<K> rhs = mul(kron(b.mult, h.action), kron(eye<K>(d), flip_map<K>(d, d), eye<K>(n)),
                        kron(b.comult, h.coaction));
    rep.add_eq("hopf-module.compatibility", lhs, rhs, {d, n});
    return rep;
}

// Tensor product of modules along the comultiplication:
//   action = (r (x) s)(id (x) Psi (x) id)(Delta (x) id (x) id).
template <class K>
ModuleRep<K> tensor_modules(const BialgebraSC<K>& b, const ModuleRep<K>& m, const ModuleRep<K>& n) {
    if (!bialg_equal(b, m.parent) || !bialg_equal(b, n.parent))
        throw std::invalid_argument("tensor_modules: parent mismatch");
    Index d = b.dim;
    LinMap<K> action = mul(kron(m.action, n.action),
                           kron(eye<K>(d), flip_map<K>(d, m.dim), eye<K>(n.dim)),
                           kron(b.comult, eye<K>(m.dim * n.dim)));
    return {b, m.dim * n.dim, action};
}

// Deterministic basis of module morphisms M -> N (intertwiners of the two
// actions), found by an exact linear solve.
template <class K>
std::vector<LinMap<K>> module_morphisms(const ModuleRep<K>& m, const ModuleRep<K>& n) {
    if (!bialg_equal(m.parent, n.parent))
        throw std::invalid_argument("module_morphisms: parent mismatch");
    Index d = m.parent.dim;
    // Unknown F (n.dim x m.dim), flattened row-major: index i*m.dim + j.
    Index vars = n.dim * m.dim;
    Index eqs = n.dim * d * m.dim;
    LinMap<K> sys = zeros<K>(eqs, vars);
    for (Index i = 0; i < n.dim; ++i)
        for (Index a = 0; a < d; ++a)
            for (Index j = 0; j < m.dim; ++j) {
                Index row = (i * d + a) * m.dim + j;
                for (Index jp = 0; jp < m.dim; ++jp)
                    sys(row, i * m.dim + jp) = sys(row, i * m.dim + jp) + m.action(jp, a * m.dim + j);
                for (Index ip = 0; ip < n.dim; ++ip)
                    sys(row, ip * m.dim + j) = sys(row, ip * m.dim + j) - n.action(i, a * n.dim + ip);
            }
    std::vector<LinMap<K>> out;
    for (const auto& v : kernel_basis(sys)) {
        LinMap<K> f = zeros<K>(n.dim, m.dim);
        for (Index i = 0; i < n.dim; ++i)
            for (Index j = 0; j < m.dim; ++j) f(i, j) = v(i * m.dim + j);
        out.push_back(std::move(f));
    }
    return out;
}

// Lax braiding induced by a Yetter-Drinfeld module against any module:
//   tau(x (x) n) = x_(-1) |> n (x) x_(0),   tau: M (x) N -> N (x) M.
// Asserted to be a module morphism for the tensor actions.
template <class K>
LinMap<K> yd_braiding(const YDRep<K>& y, const ModuleRep<K>& n) {
    const BialgebraSC<K>& b = y.parent.b;
    if (!bialg_equal(b, n.parent)) throw std::invalid_argument("yd_braiding: parent mismatch");
    Index d = b.dim;
    LinMap<K> tau = mul(kron(n.action, eye<K>(y.dim)), kron(eye<K>(d), flip_map<K>(y.dim, n.dim)),
                        kron(y.coaction, eye<K>(n.dim)));
    ModuleRep<K> m_mod{b, y.dim, y.action};
    ModuleRep<K> mn = tensor_modules(b, m_mod, n);
    ModuleRep<K> nm = tensor_modules(b, n, m_mod);
    if (!maps_equal(mul(tau, mn.action), mul(nm.action, kron(eye<K>(d), tau))))
        throw std::logic_error("yd_braiding: braiding is not a module morphism (invalid YD input?)");
    return tau;
}

// Coinvariant part of a Hopf module: ker(delta - eta (x) id).
template <class K>
LinMap<K> coinvariants(const HopfModuleRep<K>& hm) {
    LinMap<K> diff = hm.coaction - kron(hm.parent.unit, eye<K>(hm.dim));
    return kernel_matrix(diff);
}

template <class K>
struct FundamentalReport {
    Report report;
    Index coinvariant_dim = 0;
    LinMap<K> canonical;  // H (x) M^co -> M
};

// Fundamental Theorem of Hopf modules: H (x) M^co -> M, x (x) v |-> x |> v,
// is a bijection. The parent must carry a verified antipode.
template <class K>
FundamentalReport<K> fundamental_theorem_check(const HopfSC<K>& h, const HopfModuleRep<K>& hm) {
    if (!bialg_equal(h.b, hm.parent))
        throw std::invalid_argument("fundamental_theorem_check: parent mismatch");
    if (!check_antipode(h).pass())
        throw std::invalid_argument("fundamental_theorem_check: theorem hypotheses unmet (no verified antipode)");
    FundamentalReport<K> out;
    LinMap<K> co = coinvariants(hm);
    out.coinvariant_dim = co.cols();
    out.canonical = mul(hm.action, kron(eye<K>(h.dim()), co));
    out.report.subject = "fundamental-theorem";
    out.report.add("dim.identity", hm.dim == h.dim() * out.coinvariant_dim,
                   "dim M = " + std::to_string(hm.dim) + ", dim H * dim coinv = " +
                       std::to_string(h.dim() * out.coinvariant_dim));
    bool square = out.canonical.rows() == out.canonical.cols();
    bool bij = square && try_invert(out.canonical).invertible();
    out.report.add("canonical.bijective", bij, bij ? "" : "canonical map singular or non-square");
    return out;
}

// Adjoint-coaction braiding of the induced coalgebra of a Hopf algebra:
//   tau(b (x) x) = (b_(1) S(b_(3))) |> x (x) b_(2),   tau: H (x) N -> N (x) H.
// Asserted: module morphism for the tensor actions, and cocommutativity
// tau_H . Delta = Delta when N is the regular module.
template <class K>
LinMap<K> induced_ccc_braiding(const HopfSC<K>& h, const ModuleRep<K>& n) {
    const BialgebraSC<K>& b = h.b;
    if (!bialg_equal(b, n.parent))
        throw std::invalid_argument("induced_ccc_braiding: parent mismatch");
    if (!check_antipode(h).pass())
        throw std::invalid_argument("induced_ccc_braiding: parent antipode not verified");
    Index d = b.dim, nd = n.dim;
    LinMap<K> id = eye<K>(d);
    LinMap<K> delta2 = mul(kron(b.comult, id), b.comult);  // b |-> b1 (x) b2 (x) b3
    LinMap<K> tau = mul(kron(n.action, id),
                        kron(id, flip_map<K>(d, nd)),
                        kron(b.mult, id, eye<K>(nd)),
                        kron(id, flip_map<K>(d, d), eye<K>(nd)),
                        kron(id, id, h.antipode, eye<K>(nd)),
                        kron(delta2, eye<K>(nd)));
    ModuleRep<K> reg = regular_module(b);
    ModuleRep<K> hn = tensor_modules(b, reg, n);
    ModuleRep<K> nh = tensor_modules(b, n, reg);
    if (!maps_equal(mul(tau, hn.action), mul(nh.action, kron(id, tau))))
        throw std::logic_error("induced_ccc_braiding: braiding is not a module morphism");
    if (nd == d && maps_equal(n.action, b.mult)) {
        if (!maps_equal(mul(tau, b.comult), b.comult))
            throw std::logic_error("induced_ccc_braiding: cocommutativity of induced coalgebra fails");
    }
    return tau;
}

template <class K>
struct CotensorResult {
    Index dim = 0;
    LinMap<K> inclusion;  // (dim M * dim N) x dim
    LinMap<K> coaction;   // (dim C * dim) x dim, induced
    Report report;
};

// Cotensor product of two comodules over a cocommutative coalgebra: the
// equalizer of (Psi . delta_M) (x) id and id (x) delta_N, with the induced
// coaction through the first leg.
template <class K>
CotensorResult<K> cotensor(const CoalgebraSC<K>& c, const ComoduleRep<K>& m, const ComoduleRep<K>& n) {
    Index d = c.dim;
    if (!maps_equal(mul(flip_map<K>(d, d), c.comult), c.comult))
        throw std::invalid_argument("cotensor: coalgebra is not cocommutative");
    CotensorResult<K> out;
    out.report.subject = "cotensor";
    LinMap<K> left = kron(mul(flip_map<K>(d, m.dim), m.coaction), eye<K>(n.dim));
    LinMap<K> right = kron(eye<K>(m.dim), n.coaction);
    out.inclusion = kernel_matrix(LinMap<K>(left - right));
    out.dim = out.inclusion.cols();
    // induced coaction t: (id_C (x) incl) t = (delta_M (x) id_N) incl
    LinMap<K> rhs = mul(kron(m.coaction, eye<K>(n.dim)), out.inclusion);
    auto t = solve_matrix(kron(eye<K>(d), out.inclusion), rhs);
    if (!t) throw std::logic_error("cotensor: induced coaction does not restrict to the equalizer");
    out.coaction = *t;
    out.report.add_eq("coaction.restricts", mul(kron(eye<K>(d), out.inclusion), out.coaction), rhs);
    ComoduleRep<K> sub{c, out.dim, out.coaction};
    out.report.merge(check_representation(sub), "induced");
    return out;
}

}  // namespace hopfkit
