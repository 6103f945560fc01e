#pragma once

// Structure-constant bundles for finite-dimensional algebras, coalgebras,
// bialgebras and Hopf algebras in Vec with the flip braiding, plus exhaustive
// axiom checkers. Nothing is assumed at construction; the checkers decide.

#include <optional>

#include "hopfkit/report.hpp"
#include "hopfkit/solve.hpp"

namespace hopfkit {

template <class K>
struct AlgebraSC {
    Index dim = 0;
    LinMap<K> mult;  // dim x dim^2
    LinMap<K> unit;  // dim x 1
};

template <class K>
struct CoalgebraSC {
    Index dim = 0;
    LinMap<K> comult;  // dim^2 x dim
    LinMap<K> counit;  // 1 x dim
};

template <class K>
struct BialgebraSC {
    Index dim = 0;
    LinMap<K> mult, unit, comult, counit;

    AlgebraSC<K> algebra() const { return {dim, mult, unit}; }
    CoalgebraSC<K> coalgebra() const { return {dim, comult, counit}; }
};

template <class K>
struct HopfSC {
    BialgebraSC<K> b;
    LinMap<K> antipode;                  // dim x dim
    std::optional<LinMap<K>> opantipode;

    Index dim() const { return b.dim; }
};

template <class K>
bool bialg_equal(const BialgebraSC<K>& x, const BialgebraSC<K>& y) {
    return x.dim == y.dim && maps_equal(x.mult, y.mult) && maps_equal(x.unit, y.unit) &&
           maps_equal(x.comult, y.comult) && maps_equal(x.counit, y.counit);
}

template <class K>
Report check_structure(const AlgebraSC<K>& a) {
    Report rep{"algebra"};
    Index d = a.dim;
    if (a.mult.rows() != d || a.mult.cols() != d * d || a.unit.rows() != d || a.unit.cols() != 1)
        throw std::invalid_argument("check_structure: map dimensions do not match dim");
    LinMap<K> id = eye<K>(d);
    rep.add_eq("associativity", mul(a.mult, kron(a.mult, id)), mul(a.mult, kron(id, a.mult)),
               {d, d, d});
    rep.add_eq("unit.left", mul(a.mult, kron(a.unit, id)), id, {d});
    rep.add_eq("unit.right", mul(a.mult, kron(id, a.unit)), id, {d});
    return rep;
}

template <class K>
Report check_structure(const CoalgebraSC<K>& c) {
    Report rep{"coalgebra"};
    Index d = c.dim;
    if (c.comult.rows() != d * d || c.comult.cols() != d || c.counit.rows() != 1 || c.counit.cols() != d)
        throw std::invalid_argument("check_structure: map dimensions do not match dim");
    LinMap<K> id = eye<K>(d);
    rep.add_eq("coassociativity", mul(kron(c.comult, id), c.comult),
               mul(kron(id, c.comult), c.comult), {d});
    rep.add_eq("counit.left", mul(kron(c.counit, id), c.comult), id, {d});
    rep.add_eq("counit.right", mul(kron(id, c.counit), c.comult), id, {d});
    return rep;
}

// Bialgebra axioms with the flip braiding: compatibility of comult/counit
// with mult/unit, as exact map identities.
template <class K>
Report check_bialgebra(const BialgebraSC<K>& b) {
    Report rep{"bialgebra"};
    rep.merge(check_structure(b.algebra()), "algebra");
    rep.merge(check_structure(b.coalgebra()), "coalgebra");
    Index d = b.dim;
    LinMap<K> id = eye<K>(d);
    LinMap<K> psi = flip_map<K>(d, d);
    rep.add_eq("comult.mult", mul(b.comult, b.mult),
               mul(kron(b.mult, b.mult), kron(id, psi, id), kron(b.comult, b.comult)), {d, d});
    rep.add_eq("comult.unit", mul(b.comult, b.unit), kron(b.unit, b.unit), {});
    rep.add_eq("counit.mult", mul(b.counit, b.mult), kron(b.counit, b.counit), {d, d});
    rep.add_eq("counit.unit", mul(b.counit, b.unit), eye<K>(1), {});
    return rep;
}

enum class AntipodeMode { antipode, opantipode };

// antipode:   m(S (x) id)Delta = unit.counit = m(id (x) S)Delta
// opantipode: m(S'(x) id)Psi^{-1}Delta = unit.counit = m(id (x) S')Psi^{-1}Delta
template <class K>
Report check_antipode(const HopfSC<K>& h, AntipodeMode mode = AntipodeMode::antipode) {
    Report rep{mode == AntipodeMode::antipode ? "antipode" : "opantipode"};
    const BialgebraSC<K>& b = h.b;
    Index d = b.dim;
    LinMap<K> id = eye<K>(d);
    LinMap<K> target = mul(b.unit, b.counit);
    if (mode == AntipodeMode::antipode) {
        const LinMap<K>& s = h.antipode;
        rep.add_eq("antipode.left", mul(b.mult, kron(s, id), b.comult), target, {d});
        rep.add_eq("antipode.right", mul(b.mult, kron(id, s), b.comult), target, {d});
    } else {
        if (!h.opantipode) throw std::invalid_argument("check_antipode: opantipode map missing");
        const LinMap<K>& s = *h.opantipode;
        LinMap<K> twisted = mul(flip_map<K>(d, d), b.comult);  // flip is its own inverse
        rep.add_eq("opantipode.left", mul(b.mult, kron(s, id), twisted), target, {d});
        rep.add_eq("opantipode.right", mul(b.mult, kron(id, s), twisted), target, {d});
    }
    return rep;
}

// Transposes every structure map. Test-corpus generator: the result is a
// bialgebra precisely when the input is.
template <class K>
BialgebraSC<K> dual_bialgebra(const BialgebraSC<K>& b) {
    BialgebraSC<K> d;
    d.dim = b.dim;
    d.mult = b.comult.transpose();
    d.unit = b.counit.transpose();
    d.comult = b.mult.transpose();
    d.counit = b.unit.transpose();
    return d;
}

}  // namespace hopfkit
