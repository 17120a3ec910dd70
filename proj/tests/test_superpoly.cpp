#include <vector>

#include "cartansuper/superpoly.hpp"
#include "doctest.h"

using namespace cartansuper;

namespace {

ShapePtr desk() { return make_shape(2, 2, {1, 1}, 3); }

MonoIdx mono(const ShapeParams& sh, std::vector<std::int64_t> alpha,
             std::uint32_t umask) {
    return encode_mono(sh, SuperMonomial{std::move(alpha), umask});
}

}  // namespace

TEST_CASE("shape validation and derived data") {
    CHECK_THROWS_AS(make_shape(1, 2, {1}, 3), UsageError);
    CHECK_THROWS_AS(make_shape(2, 1, {1, 1}, 3), UsageError);
    CHECK_THROWS_AS(make_shape(2, 2, {1, 0}, 3), UsageError);
    CHECK_THROWS_AS(make_shape(2, 2, {1}, 3), UsageError);
    CHECK_THROWS_AS(make_shape(2, 2, {1, 1}, 2), UsageError);
    CHECK_THROWS_AS(make_shape(2, 2, {1, 1}, 9), UsageError);

    const auto sh = desk();
    CHECK(sh->m == 2);
    CHECK(sh->n == 2);
    CHECK(sh->s == 4);
    CHECK(sh->pi == std::vector<std::int64_t>{2, 2});
    CHECK(sh->xi == 6);  // |pi| + n
    CHECK(sh->alpha_count == 9);
    CHECK(sh->mono_count == 36);
    CHECK(sh->tau(1) == 0);
    CHECK(sh->tau(2) == 0);
    CHECK(sh->tau(3) == 1);
    CHECK(sh->tau(4) == 1);

    const auto big = make_shape(2, 2, {2, 1}, 5);
    CHECK(big->pi == std::vector<std::int64_t>{24, 4});
    CHECK(big->mono_count == 25 * 5 * 4);
}

TEST_CASE("monomial encoding round-trips and invariants") {
    const auto sh = desk();
    for (MonoIdx idx = 0; idx < static_cast<MonoIdx>(sh->mono_count); ++idx) {
        const SuperMonomial m = decode_mono(*sh, idx);
        CHECK(encode_mono(*sh, m) == idx);
        std::int64_t z = static_cast<std::int64_t>(m.alpha[0] + m.alpha[1]);
        int bits = 0;
        for (int b = 0; b < sh->n; ++b) bits += (m.umask >> b) & 1;
        CHECK(mono_zdegree(*sh, idx) == z + bits);
        CHECK(mono_parity(*sh, idx) == bits % 2);
        CHECK(mono_umask(*sh, idx) == m.umask);
    }
}

TEST_CASE("monomial labels") {
    const auto sh = desk();
    CHECK(mono_label(*sh, mono(*sh, {0, 0}, 0)) == "1");
    CHECK(mono_label(*sh, mono(*sh, {1, 0}, 0)) == "x1");
    CHECK(mono_label(*sh, mono(*sh, {2, 0}, 0)) == "x1^(2)");
    CHECK(mono_label(*sh, mono(*sh, {0, 1}, 3)) == "x2x3x4");
}

TEST_CASE("divided power multiplication") {
    const auto sh = desk();
    SUBCASE("x1 * x1 = 2 x1^(2) at p = 3") {
        auto [c, a] = mul_divided({1, 0}, {1, 0}, *sh);
        CHECK(c.value() == 2);
        CHECK(a == std::vector<std::int64_t>{2, 0});
    }
    SUBCASE("x1^(2) * x1 = C(3,1) x1^(3) = 0 at p = 3") {
        auto [c, a] = mul_divided({2, 0}, {1, 0}, *sh);
        CHECK(c.is_zero());
    }
    SUBCASE("mixed variables multiply componentwise") {
        auto [c, a] = mul_divided({1, 1}, {1, 1}, *sh);
        CHECK(c.value() == fp_mul(2, 2, 3));
        CHECK(a == std::vector<std::int64_t>{2, 2});
    }
}

TEST_CASE("Grassmann multiplication signs") {
    CHECK(mul_grassmann(0b01, 0b10) == std::pair<int, std::uint32_t>{1, 0b11});
    CHECK(mul_grassmann(0b10, 0b01) == std::pair<int, std::uint32_t>{-1, 0b11});
    CHECK(mul_grassmann(0b01, 0b01).first == 0);
    CHECK(mul_grassmann(0, 0b11) == std::pair<int, std::uint32_t>{1, 0b11});
    CHECK(mul_grassmann(0b11, 0b11).first == 0);
}

TEST_CASE("packed and polynomial products agree") {
    const auto sh = desk();
    for (MonoIdx a = 0; a < static_cast<MonoIdx>(sh->mono_count); ++a) {
        for (MonoIdx b = 0; b < static_cast<MonoIdx>(sh->mono_count); ++b) {
            const auto [c, idx] = mul_mono(*sh, a, b);
            const auto prod = mul_poly(SuperPolynomial::monomial(sh, a),
                                       SuperPolynomial::monomial(sh, b));
            if (c == 0) {
                CHECK(prod.is_zero());
            } else {
                REQUIRE(prod.terms().size() == 1);
                CHECK(prod.terms().begin()->first == idx);
                CHECK(prod.terms().begin()->second == c);
            }
        }
    }
}

TEST_CASE("super-commutativity of the monomial product") {
    const auto sh = desk();
    for (MonoIdx a = 0; a < static_cast<MonoIdx>(sh->mono_count); ++a) {
        for (MonoIdx b = 0; b < static_cast<MonoIdx>(sh->mono_count); ++b) {
            auto ab = mul_poly(SuperPolynomial::monomial(sh, a),
                               SuperPolynomial::monomial(sh, b));
            auto ba = mul_poly(SuperPolynomial::monomial(sh, b),
                               SuperPolynomial::monomial(sh, a));
            const int sgn = (mono_parity(*sh, a) & mono_parity(*sh, b)) ? -1 : 1;
            CHECK(ab == (sgn == 1 ? ba : ba.scaled(2)));  // 2 = -1 mod 3
        }
    }
}

TEST_CASE("partial derivatives on monomials") {
    const auto sh = desk();
    const MonoIdx x1sq = mono(*sh, {2, 0}, 0);
    const MonoIdx x1 = mono(*sh, {1, 0}, 0);
    auto [c1, m1] = apply_D_mono(*sh, 1, x1sq);
    CHECK(c1 == 1);  // divided powers: D_1 x1^(2) = x1
    CHECK(m1 == x1);
    CHECK(apply_D_mono(*sh, 2, x1sq).first == 0);

    // Grassmann partials; x3x4 has umask bits {3, 4} in increasing order.
    const MonoIdx x3x4 = mono(*sh, {0, 0}, 0b11);
    const MonoIdx x3 = mono(*sh, {0, 0}, 0b01);
    const MonoIdx x4 = mono(*sh, {0, 0}, 0b10);
    auto [c3, r3] = apply_D_mono(*sh, 3, x3x4);
    auto [c4, r4] = apply_D_mono(*sh, 4, x3x4);
    CHECK(r3 == x4);
    CHECK(r4 == x3);
    // D_3 and D_4 pick up opposite signs on x3x4.
    CHECK(c3 != 0);
    CHECK(fp_add(c3, c4, 3) == 0);
}

TEST_CASE("D_i is a superderivation of the product (exhaustive at the desk shape)") {
    const auto sh = desk();
    for (int i = 1; i <= sh->s; ++i) {
        const int tau = sh->tau(i);
        for (MonoIdx f = 0; f < static_cast<MonoIdx>(sh->mono_count); ++f) {
            const auto pf = SuperPolynomial::monomial(sh, f);
            const int df = mono_parity(*sh, f);
            for (MonoIdx g = 0; g < static_cast<MonoIdx>(sh->mono_count); ++g) {
                const auto pg = SuperPolynomial::monomial(sh, g);
                const auto lhs = apply_D(i, mul_poly(pf, pg));
                auto rhs = mul_poly(apply_D(i, pf), pg);
                auto second = mul_poly(pf, apply_D(i, pg));
                if (tau && df) second = second.scaled(2);  // (-1)^{tau(i) d(f)}
                rhs = rhs + second;
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("sparse polynomial bookkeeping") {
    const auto sh = desk();
    SuperPolynomial f(sh);
    f.add_term(mono(*sh, {1, 0}, 0), 2);
    f.add_term(mono(*sh, {1, 0}, 0), 1);  // cancels mod 3
    CHECK(f.is_zero());
    CHECK(f.parity() == -1);

    f.add_term(mono(*sh, {1, 0}, 0), 1);
    CHECK(f.parity() == 0);
    f.add_term(mono(*sh, {0, 0}, 0b01), 1);
    CHECK_THROWS(f.parity());  // mixed parity

    const auto one = SuperPolynomial::one(sh);
    CHECK(mul_poly(one, f) == f);
    CHECK((f - f).is_zero());
    CHECK(f.scaled(0).is_zero());
}
