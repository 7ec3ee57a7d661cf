#include <doctest.h>

#include "gqg/roots.hpp"
#include "helpers.hpp"

using namespace gqg;
using gqg::testing::cube_root_table;

TEST_SUITE("roots") {

TEST_CASE("rank 1 generic") {
    CycField f1(1);
    NicholsTable nt(BicharTable(f1, {{CycScalar(f1, 2)}}));
    RootSystem rs = sieve_roots(nt, Weight({4}));
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].root == Weight({1}));
    CHECK(rs.roots[0].multiplicity == 1);
    CHECK(rs.roots[0].height == 0); // unbounded
    CHECK(rs.complete_below_bound);
    CHECK(!hilbert_cross_check(nt, rs, Weight({4})).has_value());
    CHECK(sieve_is_order_independent(nt, rs));
}

TEST_CASE("rank 1 at a primitive cube root") {
    CycField f3(3);
    NicholsTable nt(BicharTable(f3, {{CycScalar::root_power(f3, 1)}}));
    RootSystem rs = sieve_roots(nt, Weight({5}));
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].height == 3);
    CHECK(!hilbert_cross_check(nt, rs, Weight({5})).has_value());
}

TEST_CASE("Cartan A2: three roots, Serre word is soft") {
    CycField f1(1);
    CycScalar q(f1, 2);
    BicharTable t(f1, {{q * q, q.inverse()}, {q.inverse(), q * q}});
    NicholsTable nt(t);
    RootSystem rs = sieve_roots(nt, Weight({3, 3}));
    REQUIRE(rs.roots.size() == 3);
    CHECK(rs.roots[0].root == Weight({0, 1}));
    CHECK(rs.roots[1].root == Weight({1, 0}));
    CHECK(rs.roots[2].root == Weight({1, 1}));
    for (const auto& r : rs.roots) {
        CHECK(r.multiplicity == 1);
        CHECK(r.height == 0);
    }
    CHECK(rs.complete_below_bound);
    CHECK(!hilbert_cross_check(nt, rs, Weight({3, 3})).has_value());
    CHECK(sieve_is_order_independent(nt, rs));
}

TEST_CASE("decoupled rank 2 has only the simple roots") {
    CycField f1(1);
    CycScalar q(f1, 2);
    BicharTable t(f1, {{q, q}, {q.inverse(), q}});
    NicholsTable nt(t);
    RootSystem rs = sieve_roots(nt, Weight({2, 2}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].root == Weight({0, 1}));
    CHECK(rs.roots[1].root == Weight({1, 0}));
    CHECK(!hilbert_cross_check(nt, rs, Weight({2, 2})).has_value());
}

TEST_CASE("cube-root rank 2 family: four roots with the stated heights") {
    CycField f15(15);
    NicholsTable nt(cube_root_table(f15, 2)); // q = z^2, a primitive 15th root
    RootSystem rs = sieve_roots(nt, Weight({3, 2}));
    REQUIRE(rs.roots.size() == 4);
    CHECK(rs.roots[0].root == Weight({0, 1}));
    CHECK(rs.roots[1].root == Weight({1, 0}));
    CHECK(rs.roots[2].root == Weight({1, 1}));
    CHECK(rs.roots[3].root == Weight({2, 1}));
    CHECK(rs.roots[0].height == 15);
    CHECK(rs.roots[1].height == 3);
    CHECK(rs.roots[2].height == 3);
    CHECK(rs.roots[3].height == 5);
    CHECK(rs.complete_below_bound);
    for (const auto& r : rs.roots) CHECK(r.multiplicity == 1);
    CHECK(!hilbert_cross_check(nt, rs, Weight({3, 2})).has_value());
    CHECK(rs.roots_with_trivial_self_pairing(nt.bichar()).empty());
    CHECK(sieve_is_order_independent(nt, rs));
}

TEST_CASE("cube-root family with q of order five") {
    CycField f15(15);
    NicholsTable nt(cube_root_table(f15, 3)); // q = z^3, a primitive 5th root
    RootSystem rs = sieve_roots(nt, Weight({3, 2}));
    REQUIRE(rs.roots.size() == 4);
    CHECK(!hilbert_cross_check(nt, rs, Weight({3, 2})).has_value());
}

TEST_CASE("roots touching the bound make completeness undetermined") {
    CycField f1(1);
    CycScalar q(f1, 2);
    BicharTable t(f1, {{q * q, q.inverse()}, {q.inverse(), q * q}});
    NicholsTable nt(t);
    RootSystem rs = sieve_roots(nt, Weight({1, 1}));
    CHECK(!rs.complete_below_bound); // the root (1,1) sits on the corner
}

TEST_CASE("trivial self-pairing is detected") {
    CycField f1(1);
    CycScalar q(f1, 2);
    // chi(a1,a1) = 1 on purpose
    BicharTable t(f1, {{CycScalar::one(f1), q}, {q, q}});
    NicholsTable nt(t);
    RootSystem rs = sieve_roots(nt, Weight({2, 0}));
    std::vector<Weight> bad = rs.roots_with_trivial_self_pairing(t);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == Weight({1, 0}));
}

} // TEST_SUITE
