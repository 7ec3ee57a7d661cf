#include <doctest.h>

#include <random>

#include "gqg/qcombinatorics.hpp"
#include "helpers.hpp"

using namespace gqg;

TEST_SUITE("scalars") {

TEST_CASE("root of unity order") {
    CycField f3(3);
    CycScalar z = CycScalar::root_power(f3, 1);
    CHECK(z * z * z == CycScalar::one(f3));
    CHECK(z != CycScalar::one(f3));
    CHECK(z * z != CycScalar::one(f3));
}

TEST_CASE("reduction modulo the cyclotomic polynomial") {
    CycField f3(3);
    CycScalar z = CycScalar::root_power(f3, 1);
    // 1 + z + z^2 = 0
    CHECK((CycScalar::one(f3) + z + z * z).is_zero());
    CHECK((CycScalar::one(f3) + z) + z.pow(2) == CycScalar(f3, 0L));
}

TEST_CASE("rational inverse and division errors") {
    CycField f3(3);
    CycScalar two(f3, 2);
    CHECK(two.inverse() == CycScalar(f3, Rational(1, 2)));
    CHECK_THROWS_AS(CycScalar(f3).inverse(), Error);
    CHECK_THROWS_AS(two / CycScalar(f3), Error);
}

TEST_CASE("inverse in the field") {
    CycField f15(15);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        CycScalar x = gqg::testing::random_scalar(f15, rng, true);
        CHECK(x * x.inverse() == CycScalar::one(f15));
    }
}

TEST_CASE("q-numbers and q-factorials") {
    CycField f3(3);
    CycScalar z = CycScalar::root_power(f3, 1);
    CHECK(q_number(3, CycScalar::one(f3)) == CycScalar(f3, 3));
    CHECK(q_number(3, z).is_zero());
    CHECK(q_factorial(3, z).is_zero());
    CHECK(q_number(0, z).is_zero());
    CHECK(q_factorial(0, z).is_one());
}

TEST_CASE("q-binomial boundary and small values") {
    CycField f1(1);
    CycField f3(3);
    std::mt19937_64 rng(11);
    CycScalar x = gqg::testing::random_scalar(f3, rng);
    CHECK(q_binomial(5, 0, x).is_one());
    CHECK(q_binomial(5, 5, x).is_one());
    CHECK(q_binomial(2, 1, x) == CycScalar::one(f3) + x);
    CHECK(q_binomial(4, 2, CycScalar(f1, -1)) == CycScalar(f1, 2));
    CHECK_THROWS_AS(q_binomial(3, 4, x), Error);
}

TEST_CASE("both Pascal recursions agree") {
    CycField f5(5);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        CycScalar x = gqg::testing::random_scalar(f5, rng);
        // other recursion: (n m) = x^m (n-1 m) + (n-1 m-1)
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned m = 0; m <= n; ++m) {
                CycScalar expect = (m == 0 || m == n)
                                       ? CycScalar::one(f5)
                                       : x.pow(m) * q_binomial(n - 1, m, x) + q_binomial(n - 1, m - 1, x);
                CHECK(q_binomial(n, m, x) == expect);
            }
        }
    }
}

TEST_CASE("q-binomial product identity") {
    CycField f5(5);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        CycScalar x = gqg::testing::random_scalar(f5, rng);
        CycScalar y = gqg::testing::random_scalar(f5, rng);
        CycScalar z = gqg::testing::random_scalar(f5, rng);
        for (unsigned n = 1; n <= 5; ++n) {
            CycScalar lhs = CycScalar::one(f5);
            for (unsigned t = 0; t < n; ++t) lhs *= y + x.pow(t) * z;
            CycScalar rhs(f5);
            for (unsigned m = 0; m <= n; ++m)
                rhs += x.pow(static_cast<long>(m) * (static_cast<long>(m) - 1) / 2) *
                       q_binomial(n, m, x) * y.pow(static_cast<long>(n - m)) * z.pow(m);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("q-binomial equals factorial ratio when defined") {
    CycField f7(7);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        CycScalar x = gqg::testing::random_scalar(f7, rng);
        for (unsigned n = 0; n <= 6; ++n) {
            for (unsigned m = 0; m <= n; ++m) {
                CycScalar d = q_factorial(m, x) * q_factorial(n - m, x);
                if (d.is_zero() || q_factorial(n, x).is_zero()) continue;
                CHECK(q_binomial(n, m, x) == q_factorial(n, x) / d);
            }
        }
    }
}

TEST_CASE("char_order") {
    CycField f1(1);
    CycField f3(3);
    CycField f15(15);
    CHECK(char_order(CycScalar::one(f3)) == 0);
    CHECK(char_order(CycScalar::root_power(f3, 1)) == 3);
    CHECK(char_order(CycScalar(f1, 2)) == 0);
    CHECK(char_order(CycScalar(f1, -1)) == 2);
    CHECK(char_order(CycScalar::root_power(f15, 2)) == 15);
    CHECK(char_order(CycScalar::root_power(f15, 5)) == 3);
    CHECK(char_order(CycScalar::root_power(f15, 3)) == 5);
    CHECK(char_order(-CycScalar::root_power(f15, 1)) == 30);
    CHECK_THROWS_AS(char_order(CycScalar(f3)), Error);
}

TEST_CASE("char_order is never 1") {
    CycField f12(12);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        CycScalar x = gqg::testing::random_scalar(f12, rng, true);
        CHECK(char_order(x) != 1);
    }
}

TEST_CASE("serialization round trip") {
    CycField f15(15);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        CycScalar x = gqg::testing::random_scalar(f15, rng);
        CHECK(CycScalar::from_coeff_strings(f15, x.to_coeff_strings()) == x);
        CHECK(parse_scalar(f15, x.to_string()) == x);
    }
    CHECK_THROWS_AS(CycScalar::from_coeff_strings(f15, {"1"}), Error);
}

TEST_CASE("scalar literals") {
    CycField f3(3);
    CHECK(parse_scalar(f3, "z^2+z+1").is_zero());
    CHECK(parse_scalar(f3, "1/4") == CycScalar(f3, Rational(1, 4)));
    CHECK(parse_scalar(f3, "2*z") == CycScalar(f3, 2) * CycScalar::root_power(f3, 1));
    CHECK(parse_scalar(f3, "(1+z)*(1-z)") ==
          (CycScalar::one(f3) + CycScalar::root_power(f3, 1)) *
              (CycScalar::one(f3) - CycScalar::root_power(f3, 1)));
    CHECK(parse_scalar(f3, "z^4") == CycScalar::root_power(f3, 1));
    CHECK(parse_scalar(f3, " -z ^ 2 ") == -CycScalar::root_power(f3, 2));
    CHECK_THROWS_AS(parse_scalar(f3, "z+"), Error);
    CHECK_THROWS_AS(parse_scalar(f3, "w"), Error);
    CHECK_THROWS_AS(parse_scalar(f3, "1 2"), Error);
}

TEST_CASE("field norm is multiplicative and detects units") {
    CycField f15(15);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 8; ++i) {
        CycScalar a = gqg::testing::random_scalar(f15, rng, true);
        CycScalar b = gqg::testing::random_scalar(f15, rng, true);
        CHECK(a.field_norm() * b.field_norm() == (a * b).field_norm());
    }
    CHECK(CycScalar::root_power(f15, 4).field_norm() == Rational(1));
    CHECK(CycScalar(f15, 2).field_norm() == Rational(256)); // 2^phi(15)
}

} // TEST_SUITE
