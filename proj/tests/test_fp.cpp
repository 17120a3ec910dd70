#include <cstdint>
#include <vector>

#include "cartansuper/fp.hpp"
#include "doctest.h"

using namespace cartansuper;

TEST_CASE("odd prime recognition") {
    CHECK_FALSE(is_odd_prime(0));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(2));
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(5));
    CHECK(is_odd_prime(7));
    CHECK_FALSE(is_odd_prime(9));
    CHECK(is_odd_prime(11));
    CHECK_FALSE(is_odd_prime(15));
    CHECK(is_odd_prime(101));
}

TEST_CASE("raw residue arithmetic") {
    const std::uint32_t p = 7;
    CHECK(fp_add(5, 4, p) == 2);
    CHECK(fp_sub(2, 5, p) == 4);
    CHECK(fp_mul(5, 4, p) == 6);
    CHECK(fp_neg(3, p) == 4);
    CHECK(fp_neg(0, p) == 0);
    CHECK(fp_from_int(-1, p) == 6);
    CHECK(fp_from_int(-14, p) == 0);
    CHECK(fp_from_int(16, p) == 2);
}

TEST_CASE("fp_pow and fp_inv") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(fp_pow(a, p - 1, p) == 1);  // Fermat
            CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
        }
        CHECK(fp_pow(0, 0, p) == 1);
    }
    CHECK_THROWS_AS(fp_inv(0, 5), DivisionByZeroError);
}

TEST_CASE("Lucas binomials agree with the Pascal recurrence") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        // Pascal's triangle computed mod p directly; the recurrence is exact.
        std::vector<std::vector<std::uint32_t>> row(40);
        for (std::size_t nn = 0; nn < row.size(); ++nn) {
            row[nn].assign(nn + 1, 1);
            for (std::size_t k = 1; k < nn; ++k)
                row[nn][k] = fp_add(row[nn - 1][k - 1], row[nn - 1][k], p);
            for (std::size_t k = 0; k <= nn; ++k)
                CHECK(binom_mod_p(nn, k, p) == row[nn][k]);
        }
    }
}

TEST_CASE("Lucas vanishing digits") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (std::uint64_t k = 1; k < p; ++k) CHECK(binom_mod_p(p, k, p) == 0);
        CHECK(binom_mod_p(p, 0, p) == 1);
        CHECK(binom_mod_p(p, p, p) == 1);
        CHECK(binom_mod_p(p * p, p, p) == 0);  // digits (1,0,0) vs (0,1,0)
        CHECK(binom_mod_p(p * p, p * p, p) == 1);
    }
    CHECK(binom_mod_p(4, 2, 3) == 0);   // 6 mod 3
    CHECK(binom_mod_p(10, 5, 3) == 0);  // 252 mod 3
    CHECK(binom_mod_p(8, 2, 3) == 1);   // 28 mod 3
}

TEST_CASE("multi-index binomials are componentwise products") {
    const std::vector<std::int64_t> top{4, 8};
    const std::vector<std::int64_t> bot{2, 2};
    CHECK(binom_mod_p(top, bot, 3) ==
          fp_mul(binom_mod_p(4, 2, 3), binom_mod_p(8, 2, 3), 3));
    CHECK(binom_mod_p(top, bot, 3) == 0);
    CHECK(binom_mod_p({1, 1}, {1, 1}, 5) == 1);
}

TEST_CASE("FpScalar carries its modulus") {
    const FpScalar a(4, 7), b(5, 7);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 6);
    CHECK((a * b).value() == 6);
    CHECK((-a).value() == 3);
    CHECK(a.inv().value() == 2);  // 4 * 2 = 8 = 1 mod 7
    CHECK(FpScalar(-3, 7).value() == 4);
    CHECK(FpScalar(0, 7).is_zero());

    const FpScalar other(1, 5);
    CHECK_THROWS_AS((void)(a + other), UsageError);
    CHECK_THROWS_AS((void)(a * other), UsageError);
    CHECK_THROWS_AS(FpScalar(0, 5).inv(), DivisionByZeroError);
}
