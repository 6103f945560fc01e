#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/natposet.hpp"

using namespace hopfkit;

TEST_CASE("submonoid membership and conductor") {
    NumericalSubmonoid s({2, 3});
    CHECK(s.member(0));
    CHECK_FALSE(s.member(1));
    CHECK(s.member(2));
    CHECK(s.member(3));
    CHECK(s.member(100));
    NumericalSubmonoid s2({4, 6});
    CHECK(s2.gcd_value == 2);
    CHECK(s2.member(10));
    CHECK_FALSE(s2.member(2));
    CHECK_FALSE(s2.member(7));
    NumericalSubmonoid s3({3, 5});
    CHECK_FALSE(s3.member(7));
    CHECK(s3.member(8));
    CHECK(s3.frobenius_bound == 8);
}

TEST_CASE("closure operator evaluation and idempotence") {
    ClosureOp t{IntSet{NumericalSubmonoid({3})}};
    CHECK(t.eval(0) == 0);
    CHECK(t.eval(1) == 3);
    CHECK(t.eval(4) == 6);
    for (nat n = 0; n <= 30; ++n) {
        CHECK(n <= t.eval(n));
        CHECK(t.eval(t.eval(n)) == t.eval(n));
    }
}

TEST_CASE("classification: single generator is Hopf, <2,3> is not") {
    auto v1 = classify_nat_monad(IntSet{NumericalSubmonoid({2})}, 100);
    CHECK(v1.monad);
    CHECK(v1.bimonad);
    CHECK(v1.hopf);

    auto v2 = classify_nat_monad(IntSet{NumericalSubmonoid({2, 3})}, 100);
    CHECK(v2.bimonad);
    CHECK_FALSE(v2.hopf);
    CHECK(v2.witness.find("T(T(") != std::string::npos);

    auto v3 = classify_nat_monad(IntSet{NumericalSubmonoid({1})}, 100);
    CHECK(v3.hopf);  // S = N0, T = id
}

TEST_CASE("classification: periodic sets that are not submonoids") {
    // S = {0} u {n >= 5} is infinite and contains 0 but is not closed: 5+5=10 ok,
    // but 0+... closure fails at e.g. nothing? actually {0,5,6,7,...} is closed!
    PeriodicSet ps{{0}, 5, 1, {0}};
    auto v = classify_nat_monad(IntSet{ps}, 60);
    CHECK(v.bimonad);
    CHECK_FALSE(v.hopf);

    // odd numbers (and 0): 1+1=2 missing, not additively closed
    PeriodicSet odd{{0}, 1, 2, {1}};
    auto v2 = classify_nat_monad(IntSet{odd}, 60);
    CHECK_FALSE(v2.bimonad);

    // multiples of 3 presented periodically: Hopf
    PeriodicSet m3{{}, 0, 3, {0}};
    auto v3 = classify_nat_monad(IntSet{m3}, 60);
    CHECK(v3.hopf);

    PeriodicSet finite{{1, 2}, 3, 1, {}};
    CHECK_THROWS_AS((void)classify_nat_monad(IntSet{finite}, 10), std::invalid_argument);
}

TEST_CASE("agreement of algebraic and brute-force verdicts over subsets of {1..6}") {
    for (int mask = 1; mask < 64; ++mask) {
        std::set<nat> gens;
        for (int b = 0; b < 6; ++b)
            if (mask & (1 << b)) gens.insert(b + 1);
        // must not throw: the two verdicts agree (hard cross-check inside)
        auto v = classify_nat_monad(IntSet{NumericalSubmonoid(gens)}, 100);
        CHECK(v.bimonad);
        // closed form: Hopf iff min generator divides the rest
        nat m0 = *gens.begin();
        bool expect = std::all_of(gens.begin(), gens.end(), [m0](nat g) { return g % m0 == 0; });
        CHECK(v.hopf == expect);
    }
}

TEST_CASE("T(n) closed form for single generators") {
    for (nat g : {1, 2, 3, 5}) {
        ClosureOp t{IntSet{NumericalSubmonoid({g})}};
        for (nat n = 0; n <= 40; ++n) CHECK(t.eval(n) == ((n + g - 1) / g) * g);
    }
}

namespace {

FiniteMonoid cyclic_group(Eigen::Index n) {
    FiniteMonoid m;
    m.order = n;
    m.identity = 0;
    m.table.resize(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m.table[i * n + j] = (i + j) % n;
    return m;
}

FiniteMonoid idempotent_monoid() {
    FiniteMonoid m;
    m.order = 2;
    m.identity = 0;
    m.table = {0, 1, 1, 1};
    return m;
}

}  // namespace

TEST_CASE("monoid validation") {
    CHECK_NOTHROW(cyclic_group(3).validate());
    CHECK_NOTHROW(idempotent_monoid().validate());
    FiniteMonoid bad = cyclic_group(2);
    bad.table[3] = 1;  // g*g = g: breaks associativity? no: {0,1;1,1} is the idempotent monoid
    CHECK_NOTHROW(bad.validate());
    bad.table = {0, 1, 1, 2};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK(cyclic_group(2).is_group());
    CHECK_FALSE(idempotent_monoid().is_group());
}

TEST_CASE("m-set enumeration counts") {
    auto z2sets = enumerate_msets(cyclic_group(2), 2);
    // size 1: trivial; size 2: trivial and swap actions -> 3 up to iso
    CHECK(z2sets.size() == 3);
    auto trivial_sets = enumerate_msets(FiniteMonoid{1, {0}, 0}, 3);
    CHECK(trivial_sets.size() == 3);  // one per size
}

TEST_CASE("fusion verdicts for unary theories") {
    auto vz2 = theory_fusion_check(cyclic_group(2), 3);
    CHECK(vz2.hopf);
    auto vz3 = theory_fusion_check(cyclic_group(3), 3);
    CHECK(vz3.hopf);
    auto vid = theory_fusion_check(idempotent_monoid(), 3);
    CHECK_FALSE(vid.hopf);
    CHECK_FALSE(vid.witness.empty());
    auto vtriv = theory_fusion_check(FiniteMonoid{1, {0}, 0}, 3);
    CHECK(vtriv.hopf);
    // regular probe keeps the verdict sound even for tiny max_set
    auto vsmall = theory_fusion_check(cyclic_group(3), 1);
    CHECK(vsmall.hopf);
    auto vsmall2 = theory_fusion_check(idempotent_monoid(), 1);
    CHECK_FALSE(vsmall2.hopf);
}

TEST_CASE("pseudo-constant scan") {
    auto s1 = pseudo_constant_scan(cyclic_group(2), 3);
    CHECK(s1.pseudo_constants.empty());
    auto s2 = pseudo_constant_scan(idempotent_monoid(), 3);
    // e is constant on the regular m-set but not on the trivial 2-point action
    CHECK(s2.pseudo_constants.empty());
    bool e_constant_somewhere = false;
    for (auto& probe : s2.per_probe)
        for (auto u : probe)
            if (u == 1) e_constant_somewhere = true;
    CHECK(e_constant_somewhere);
    auto s3 = pseudo_constant_scan(FiniteMonoid{1, {0}, 0}, 3);
    CHECK(s3.pseudo_constants.empty());
}

TEST_CASE("monoid enumeration up to isomorphism") {
    CHECK(enumerate_monoids(1).size() == 1);
    CHECK(enumerate_monoids(2).size() == 2);
    auto m3 = enumerate_monoids(3);
    CHECK(m3.size() == 7);
    int groups = 0;
    for (const auto& m : m3)
        if (m.is_group()) ++groups;
    CHECK(groups == 1);  // only Z/3
}

TEST_CASE("fusion check agrees with the group criterion over all monoids of order <= 3") {
    for (Eigen::Index n = 1; n <= 3; ++n)
        for (const auto& m : enumerate_monoids(n)) {
            auto v = theory_fusion_check(m, 3);  // hard cross-check inside
            CHECK(v.hopf == m.is_group());
            if (m.is_group()) CHECK(pseudo_constant_scan(m, 3).pseudo_constants.empty());
        }
}
