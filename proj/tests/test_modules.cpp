#include <doctest.h>

#include "gqg/modules.hpp"
#include "gqg/qcombinatorics.hpp"
#include "helpers.hpp"

using namespace gqg;
using gqg::testing::cube_root_table;

namespace {

std::vector<std::pair<Weight, Weight>> rank1_window(long lo, long hi) {
    std::vector<std::pair<Weight, Weight>> out;
    for (long a = lo; a <= hi; ++a)
        for (long b = lo; b <= hi; ++b) out.push_back({Weight({a}), Weight({b})});
    return out;
}

} // namespace

TEST_SUITE("modules") {

TEST_CASE("rank 1 string modules") {
    CycField f1(1);
    BicharTable t(f1, {{CycScalar(f1, 2)}});
    OmegaTable w = OmegaTable::trivial(f1, 1);
    for (long m = 0; m <= 4; ++m) {
        CharacterTable ct = character(t, w, Weight({0}), Weight({m}), Weight({m + 2}));
        CHECK(ct.complete);
        CHECK(ct.total_dim == static_cast<unsigned long>(m + 1));
        for (long k = 0; k <= m; ++k) CHECK(ct.multiplicity(Weight({k})) == 1);
        CHECK(ct.multiplicity(Weight({m + 1})) == 0);
    }
    // b < a: l1 = q^{b-a} is not a nonnegative power, the module never closes
    CharacterTable open = character(t, w, Weight({2}), Weight({0}), Weight({6}));
    CHECK(!open.complete);
}

TEST_CASE("highest weight space is always one-dimensional") {
    CycField f15(15);
    BicharTable t = cube_root_table(f15, 2);
    OmegaTable w = OmegaTable::trivial(f15, 2);
    CharacterTable ct = character(t, w, Weight({0, 0}), Weight({1, 1}), Weight({4, 4}));
    CHECK(ct.multiplicity(Weight({0, 0})) == 1);
    for (const auto& [nu, m] : ct.mult) {
        CHECK(nu.nonnegative());
        CHECK(m >= 1);
    }
}

TEST_CASE("trivial highest weight gives the one-dimensional module") {
    CycField f15(15);
    BicharTable t = cube_root_table(f15, 2);
    OmegaTable w = OmegaTable::trivial(f15, 2);
    CharacterTable ct = character(t, w, Weight({0, 0}), Weight({0, 0}), Weight({3, 3}));
    CHECK(ct.complete);
    CHECK(ct.total_dim == 1);
    CHECK(ct.multiplicity(Weight({0, 0})) == 1);
}

TEST_CASE("contravariant matrix at degree zero") {
    CycField f1(1);
    BicharTable t(f1, {{CycScalar(f1, 2)}});
    OmegaTable w = OmegaTable::trivial(f1, 1);
    NicholsTable nt(t);
    UContext ctx(nt, Weight({3}));
    auto m = contravariant_matrix(ctx, w, Weight({0}), Weight({2}), Weight({0}));
    REQUIRE(m.size() == 1);
    CHECK(m[0][0].is_one());
}

TEST_CASE("rank 1 contravariant values vanish exactly past the string") {
    CycField f1(1);
    BicharTable t(f1, {{CycScalar(f1, 2)}});
    OmegaTable w = OmegaTable::trivial(f1, 1);
    NicholsTable nt(t);
    UContext ctx(nt, Weight({6}));
    long m = 2; // l1 = q^2
    for (long k = 1; k <= 5; ++k) {
        auto mat = contravariant_matrix(ctx, w, Weight({0}), Weight({m}), Weight({k}));
        REQUIRE(mat.size() == 1);
        CHECK(mat[0][0].is_zero() == (k > m));
    }
}

TEST_CASE("contravariant rank equals the constructed dimension") {
    CycField f15(15);
    BicharTable t = cube_root_table(f15, 2);
    OmegaTable w = OmegaTable::trivial(f15, 2);
    NicholsTable nt(t);
    UContext ctx(nt, Weight({3, 2}));
    Weight lambda({0, 0}), mu({1, 1});
    SimpleModule mod(t, w, lambda, mu, Weight({3, 2}));
    for (const Weight& nu : weights_below(Weight({3, 2}))) {
        auto mat = contravariant_matrix(ctx, w, lambda, mu, nu);
        CHECK(matrix_rank(f15, mat) == mod.dim(nu));
        CHECK(mod.dim(nu) <= nt.dim(nu));
        // matrix elements evaluated through the module agree with
        // straightening + Sh + Lambda
        const auto& ew = nt.basis(nu);
        const auto& fw = nt.fbasis(nu);
        for (size_t a = 0; a < ew.size(); ++a)
            for (size_t b = 0; b < fw.size(); ++b)
                CHECK(mat[a][b] == mod.sh_functional(ew[a], fw[b]));
    }
}

TEST_CASE("rank is stable under reordering the pivot words") {
    CycField f15(15);
    BicharTable t = cube_root_table(f15, 2);
    OmegaTable w = OmegaTable::trivial(f15, 2);
    NicholsTable nt(t);
    UContext ctx(nt, Weight({2, 2}));
    Weight nu({2, 1});
    auto mat = contravariant_matrix(ctx, w, Weight({0, 0}), Weight({1, 1}), nu);
    size_t r = matrix_rank(f15, mat);
    std::vector<Vec> permuted(mat.rbegin(), mat.rend());
    for (auto& row : permuted) std::reverse(row.begin(), row.end());
    CHECK(matrix_rank(f15, permuted) == r);
}

TEST_CASE("fin window on the rank 1 line") {
    CycField f1(1);
    BicharTable t(f1, {{CycScalar(f1, 2)}});
    OmegaTable w = OmegaTable::trivial(f1, 1);
    auto fins = fin_window(t, w, rank1_window(0, 3), Weight({8}));
    CHECK(fins.size() == 10); // exactly the pairs with b >= a
    for (const auto& e : fins) {
        CHECK(e.mu[0] >= e.lambda[0]);
        CHECK(e.table.total_dim == static_cast<unsigned long>(e.mu[0] - e.lambda[0] + 1));
    }
}

TEST_CASE("octagon profile of the trivial module") {
    CycField f15(15);
    BicharTable t = cube_root_table(f15, 2);
    OmegaTable w = OmegaTable::trivial(f15, 2);
    CharacterTable ct = character(t, w, Weight({0, 0}), Weight({0, 0}), Weight({3, 3}));
    std::vector<unsigned> h = z3_h_profile(ct, t, w);
    CHECK(h == std::vector<unsigned>(8, 0));
}

TEST_CASE("octagon profile of a small cube-root module") {
    CycField f15(15);
    BicharTable t = cube_root_table(f15, 2);
    OmegaTable w = OmegaTable::trivial(f15, 2);
    CharacterTable ct = character(t, w, Weight({0, 0}), Weight({1, 2}), Weight({9, 6}));
    REQUIRE(ct.complete);
    std::vector<unsigned> h = z3_h_profile(ct, t, w);
    // structural constraints: even legs small, odd legs capped by ord(q)
    unsigned oq = char_order(t.chi(Weight::unit(2, 1), Weight::unit(2, 1)));
    for (int k : {1, 3, 5, 7}) CHECK(h[static_cast<size_t>(k)] <= 2);
    for (int k : {0, 2, 4, 6}) CHECK(h[static_cast<size_t>(k)] <= oq - 1);
    // l2 = 1 lies in the cyclic group of q, forcing the stated symmetries
    CHECK(h[7] == h[1]);
    CHECK(h[5] == h[3]);
}

TEST_CASE("profile rejects the wrong shape") {
    CycField f1(1);
    BicharTable t(f1, {{CycScalar(f1, 2)}});
    OmegaTable w = OmegaTable::trivial(f1, 1);
    CharacterTable ct = character(t, w, Weight({0}), Weight({1}), Weight({3}));
    CHECK_THROWS_AS(z3_h_profile(ct, t, w), Error);
}

} // TEST_SUITE
