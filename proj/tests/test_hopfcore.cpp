#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "hopfkit/fusion.hpp"

using namespace hopfkit;
namespace cp = hopfkit::corpus;

TEST_CASE("group and monoid algebras pass the structure checks") {
    auto z2 = cp::group_algebra_cyclic<Rat>(2);
    CHECK(check_structure(z2.algebra()).pass());
    CHECK(check_structure(z2.coalgebra()).pass());
    auto m2 = cp::idempotent_monoid_algebra<Rat>();
    CHECK(check_structure(m2.algebra()).pass());
    CHECK(check_structure(m2.coalgebra()).pass());
}

TEST_CASE("deliberate unit-law violation is reported with a witness") {
    auto z2 = cp::group_algebra_cyclic<Rat>(2);
    z2.mult(1, 0 * 2 + 1) = Rat(0);  // 1*g := 1
    z2.mult(0, 0 * 2 + 1) = Rat(1);
    auto rep = check_structure(z2.algebra());
    CHECK_FALSE(rep.pass());
    bool unit_failed = false;
    for (auto& it : rep.items)
        if (!it.ok && it.axiom.find("unit") != std::string::npos && !it.witness.empty())
            unit_failed = true;
    CHECK(unit_failed);
}

TEST_CASE("bialgebra axioms on the corpus") {
    CHECK(check_bialgebra(cp::group_algebra_cyclic<Rat>(2)).pass());
    CHECK(check_bialgebra(cp::group_algebra_cyclic<Rat>(3)).pass());
    CHECK(check_bialgebra(cp::group_algebra_product<Rat>({2, 2})).pass());
    CHECK(check_bialgebra(cp::idempotent_monoid_algebra<Rat>()).pass());
    CHECK(check_bialgebra(cp::gf2_superline()).pass());
    CHECK(check_bialgebra(cp::trivial_bialgebra<Rat>()).pass());
}

TEST_CASE("the primitive line is a bialgebra only in characteristic 2") {
    CHECK_FALSE(check_bialgebra(cp::divided_line<Rat>(Rat(1))).pass());
    CHECK(check_bialgebra(cp::divided_line<Fp>(Fp(1, 2))).pass());
    CHECK(check_bialgebra(cp::divided_line<Fp>(Fp(1, 3))).pass() == false);
}

TEST_CASE("corrupted comultiplication fails the counit axiom with a witness") {
    auto z2 = cp::group_algebra_cyclic<Rat>(2);
    z2.comult = zeros<Rat>(4, 2);
    z2.comult(0, 0) = Rat(1);      // 1 -> 1(x)1
    z2.comult(1 * 2 + 0, 1) = Rat(1);  // g -> g(x)1
    auto rep = check_bialgebra(z2);
    CHECK_FALSE(rep.pass());
    bool counit_failed = false;
    for (auto& it : rep.items)
        if (!it.ok && it.axiom.find("counit") != std::string::npos) counit_failed = true;
    CHECK(counit_failed);
}

TEST_CASE("antipode checks: direct, oracle-solved, and inconsistent cases") {
    auto z2 = cp::group_hopf_cyclic<Rat>(2);
    CHECK(maps_equal(z2.antipode, eye<Rat>(2)));
    CHECK(check_antipode(z2).pass());

    for (Index n : {2, 3, 4}) {
        auto b = cp::group_algebra_cyclic<Rat>(n);
        auto s = oracles::solve_antipode(b);
        REQUIRE(s.has_value());
        CHECK(check_antipode(cp::with_antipode(b, *s)).pass());
    }

    auto m2 = cp::idempotent_monoid_algebra<Rat>();
    CHECK_FALSE(oracles::solve_antipode(m2).has_value());
    CHECK_FALSE(check_antipode(cp::with_antipode(m2, eye<Rat>(2))).pass());
}

TEST_CASE("antipode uniqueness: the linear system has no homogeneous solutions") {
    CHECK(oracles::antipode_solution_space_dim(cp::group_algebra_cyclic<Rat>(2)) == 0);
    CHECK(oracles::antipode_solution_space_dim(cp::group_algebra_cyclic<Rat>(3)) == 0);
    CHECK(oracles::antipode_solution_space_dim(cp::group_algebra_product<Rat>({2, 2})) == 0);
}

TEST_CASE("opantipode axioms for a cocommutative Hopf algebra") {
    auto z3 = cp::group_hopf_cyclic<Rat>(3);
    HopfSC<Rat> h{z3.b, z3.antipode, z3.antipode};  // S' = S when cocommutative
    CHECK(check_antipode(h, AntipodeMode::opantipode).pass());
    CHECK_THROWS_AS((void)check_antipode(z3, AntipodeMode::opantipode), std::invalid_argument);
}

TEST_CASE("duals: self-duality, double transpose, verdict preservation") {
    auto z2 = cp::group_algebra_cyclic<Rat>(2);
    auto d = dual_bialgebra(z2);
    CHECK(check_bialgebra(d).pass());
    CHECK(bialg_equal(dual_bialgebra(d), z2));

    auto broken = z2;
    broken.comult(0, 1) = Rat(7);
    CHECK_FALSE(check_bialgebra(broken).pass());
    CHECK_FALSE(check_bialgebra(dual_bialgebra(broken)).pass());
}

TEST_CASE("check_bialgebra verdict agrees on duals across the corpus") {
    std::vector<BialgebraSC<Rat>> items = {
        cp::group_algebra_cyclic<Rat>(2), cp::group_algebra_cyclic<Rat>(3),
        cp::group_algebra_product<Rat>({2, 2}), cp::idempotent_monoid_algebra<Rat>(),
        cp::trivial_bialgebra<Rat>(), cp::divided_line<Rat>(Rat(1))};
    for (const auto& b : items)
        CHECK(check_bialgebra(b).pass() == check_bialgebra(dual_bialgebra(b)).pass());
}
