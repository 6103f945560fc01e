#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/linmap.hpp"
#include "hopfkit/solve.hpp"

using namespace hopfkit;

namespace {

LinMap<Rat> from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    Index r = rows.size(), c = rows.begin()->size();
    LinMap<Rat> m = zeros<Rat>(r, c);
    Index i = 0;
    for (auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

// Small deterministic generator for property checks.
struct Lcg {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("kron identities and hand-expanded example") {
    CHECK(maps_equal(kron(eye<Rat>(1), eye<Rat>(1)), eye<Rat>(1)));
    CHECK(maps_equal(kron(eye<Rat>(2), eye<Rat>(3)), eye<Rat>(6)));
    LinMap<Rat> a = from_rows({{2}});
    LinMap<Rat> b = from_rows({{0, 1}, {1, 0}});
    CHECK(maps_equal(kron(a, b), from_rows({{0, 2}, {2, 0}})));
}

TEST_CASE("kron is associative entrywise") {
    Lcg rng;
    for (int trial = 0; trial < 4; ++trial) {
        LinMap<Rat> a = zeros<Rat>(2, 3), b = zeros<Rat>(3, 1), c = zeros<Rat>(2, 2);
        for (Index i = 0; i < a.size(); ++i) a(i / 3, i % 3) = Rat(rng.next(-3, 3));
        for (Index i = 0; i < b.size(); ++i) b(i % 3, 0) = Rat(rng.next(-3, 3), rng.next(1, 3));
        for (Index i = 0; i < c.size(); ++i) c(i / 2, i % 2) = Rat(rng.next(-3, 3));
        CHECK(maps_equal(kron(kron(a, b), c), kron(a, kron(b, c))));
    }
}

TEST_CASE("kron over mismatched prime fields is rejected") {
    LinMap<Fp> a = zeros<Fp>(1, 1), b = zeros<Fp>(1, 1);
    a(0, 0) = Fp(1, 2);
    b(0, 0) = Fp(1, 3);
    CHECK_THROWS_AS((void)kron(a, b), std::invalid_argument);
}

TEST_CASE("try_invert: involution, singular witness, exact rational inverse") {
    LinMap<Rat> swap = from_rows({{0, 1}, {1, 0}});
    auto r1 = try_invert(swap);
    REQUIRE(r1.invertible());
    CHECK(maps_equal(*r1.inverse, swap));

    LinMap<Rat> ones = from_rows({{1, 1}, {1, 1}});
    auto r2 = try_invert(ones);
    REQUIRE_FALSE(r2.invertible());
    REQUIRE(r2.kernel_witness.has_value());
    CHECK((*r2.kernel_witness)(0) == Rat(1));
    CHECK((*r2.kernel_witness)(1) == Rat(-1));

    LinMap<Rat> diag = from_rows({{2, 0}, {0, 3}});
    auto r3 = try_invert(diag);
    REQUIRE(r3.invertible());
    CHECK((*r3.inverse)(0, 0) == Rat(1, 2));
    CHECK((*r3.inverse)(1, 1) == Rat(1, 3));
    CHECK(maps_equal(LinMap<Rat>(*r3.inverse * diag), eye<Rat>(2)));
    CHECK(maps_equal(LinMap<Rat>(diag * *r3.inverse), eye<Rat>(2)));

    CHECK_THROWS_AS((void)try_invert(zeros<Rat>(2, 3)), std::invalid_argument);
}

TEST_CASE("kernel bases") {
    auto kb0 = kernel_basis(zeros<Rat>(2, 2));
    CHECK(kb0.size() == 2);
    CHECK(kernel_basis(eye<Rat>(3)).empty());
    LinMap<Rat> row = from_rows({{1, 1}});
    auto kb = kernel_basis(row);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0](0) == Rat(1));
    CHECK(kb[0](1) == Rat(-1));
}

TEST_CASE("rank-nullity holds across fields") {
    Lcg rng;
    for (int trial = 0; trial < 8; ++trial) {
        Index r = 1 + trial % 4, c = 1 + (trial * 7) % 5;
        LinMap<Rat> m = zeros<Rat>(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) m(i, j) = Rat(rng.next(-2, 2));
        CHECK(rank(m) + static_cast<Index>(kernel_basis(m).size()) == c);

        LinMap<Fp> g = zeros<Fp>(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) g(i, j) = Fp(rng.next(0, 6), 7);
        CHECK(rank(g) + static_cast<Index>(kernel_basis(g).size()) == c);
    }
}

TEST_CASE("inverse over GF(p)") {
    LinMap<Fp> m = zeros<Fp>(2, 2);
    m(0, 0) = Fp(1, 5);
    m(0, 1) = Fp(2, 5);
    m(1, 0) = Fp(3, 5);
    m(1, 1) = Fp(4, 5);
    auto r = try_invert(m);
    REQUIRE(r.invertible());
    CHECK(maps_equal(LinMap<Fp>(m * *r.inverse), eye<Fp>(2)));
}

TEST_CASE("solve picks the free-coordinate-zero solution and detects inconsistency") {
    LinMap<Rat> a = from_rows({{1, 2, 0}, {0, 0, 1}});
    Vec<Rat> b(2);
    b << Rat(3), Rat(5);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == Rat(3));
    CHECK((*x)(1) == Rat(0));
    CHECK((*x)(2) == Rat(5));

    LinMap<Rat> bad = from_rows({{1, 1}, {1, 1}});
    Vec<Rat> rhs(2);
    rhs << Rat(0), Rat(1);
    CHECK_FALSE(solve(bad, rhs).has_value());
}

TEST_CASE("quotient bookkeeping: proj.sec = id, proj kills relations") {
    LinMap<Rat> rel = zeros<Rat>(4, 2);
    rel(0, 0) = Rat(1);
    rel(2, 0) = Rat(-1);
    rel(1, 1) = Rat(2);
    rel(3, 1) = Rat(2);
    auto q = make_quotient<Rat>(4, rel);
    CHECK(q.dim == 2);
    CHECK(maps_equal(LinMap<Rat>(q.proj * q.sec), eye<Rat>(2)));
    CHECK(is_zero(LinMap<Rat>(q.proj * rel)));
}

TEST_CASE("flip is an involution matching the index convention") {
    LinMap<Rat> f = flip_map<Rat>(2, 3);
    CHECK(maps_equal(LinMap<Rat>(flip_map<Rat>(3, 2) * f), eye<Rat>(6)));
    // e_1 (x) e_2 (flat 1*3+2=5) |-> e_2 (x) e_1 (flat 2*2+1=5 in 3x2)
    CHECK(f(2 * 2 + 1, 1 * 3 + 2) == Rat(1));
}
