#include <gtest/gtest.h>

#include "congru/lucas.hpp"
#include "congru/oracle.hpp"
#include "congru/quadform.hpp"
#include "congru/sums.hpp"

using namespace congru;

TEST(Examples, ModularBasics) {
    EXPECT_EQ(pow_mod(3, 4, 5), 1u);
    EXPECT_EQ(pow_mod(2, 10, PrimePower(31, 2)), 63u);
    EXPECT_EQ(pow_mod(7, 0, 13), 1u);
    EXPECT_EQ(inv_mod(3, PrimePower(5, 2)), 17u);
    EXPECT_THROW(inv_mod(5, PrimePower(5, 2)), NotAUnit);
    EXPECT_EQ(jacobi(2, 15), 1);
    EXPECT_EQ(jacobi(3, 13), 1);
    EXPECT_EQ(sqrt_mod_p(4, 13), 2u);
    EXPECT_EQ(sqrt_mod_p(0, 13), 0u);
    EXPECT_THROW(sqrt_mod_p(2, 5), NonResidue);
}

TEST(Examples, Factorials) {
    EXPECT_EQ(factorial_nu(12, 5), 2u);
    EXPECT_EQ(factorial_nu(4, 5), 0u);
    EXPECT_EQ(factorial_unit(12, PrimePower(5, 2)), 14u);
    EXPECT_EQ(factorial_unit(0, PrimePower(5, 2)), 1u);
    EXPECT_EQ(factorial_unit(5, PrimePower(5, 2)), 24u);
    const PrimePower pp(5, 2);
    auto a = factorial_quotient({6}, {3, 3}, pp);
    EXPECT_EQ(a.nu, 1);
    EXPECT_EQ(a.unit % 5, 4u);
    auto b = factorial_quotient({8}, {4, 4}, pp);
    EXPECT_EQ(b.nu, 1);
    EXPECT_EQ(b.unit % 5, 14u % 5);
    auto c = factorial_quotient({0}, {0}, pp);
    EXPECT_EQ(c.nu, 0);
    EXPECT_EQ(c.unit, 1u);
}

TEST(Examples, Representations) {
    auto r = represent(31, 1, 3);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].x, 2);
    EXPECT_EQ(r[0].y, 3);
    EXPECT_EQ(represent(13, 1, 1).size(), 2u);
    EXPECT_TRUE(represent(7, 1, 5).empty());
    auto t13 = two_squares_normalized(13);
    EXPECT_EQ(t13.c, -3);
    EXPECT_EQ(t13.d, 2);
    auto t5 = two_squares_normalized(5);
    EXPECT_EQ(t5.c, 1);
    EXPECT_EQ(t5.d, 2);
    auto t193 = two_squares_normalized(193);
    EXPECT_EQ(t193.c, -7);
    EXPECT_EQ(t193.d, -12);
    EXPECT_EQ(normalize_odd_part_sign(12), -12);
    EXPECT_EQ(normalize_odd_part_sign(1), 1);
    EXPECT_EQ(normalize_odd_part_sign(-2), 2);
    EXPECT_EQ(delta(8), 1);
    EXPECT_EQ(delta(4), -1);
    EXPECT_EQ(delta(-16), 1);
    auto s = two_adic_split(-12);
    EXPECT_EQ(s.alpha, 2);
    EXPECT_EQ(s.t0, -3);
}

TEST(Examples, LucasValues) {
    auto a = lucas_uv(16, 1, 3, 1000000007ULL);
    EXPECT_EQ(a.u, 255u);
    EXPECT_EQ(a.v, 4048u);
    for (u64 n : {0, 1, 5, 12}) {
        auto d = lucas_uv(2, 1, n, 13);
        EXPECT_EQ(d.u, n % 13);
        EXPECT_EQ(d.v, 2u);
    }
    auto st = lucas_stream(16, 1, 2, 1000003);
    EXPECT_EQ(st[2].u, 16u);
    EXPECT_EQ(st[2].v, 254u);
    auto f = lucas_stream(1, -1, 3, 97);
    EXPECT_EQ(f[3].u, 2u);
}

TEST(Examples, Franel) {
    auto f = franel_sequence(PrimePower(1009, 1));
    EXPECT_EQ(f[0], 1u);
    EXPECT_EQ(f[1], 2u);
    EXPECT_EQ(f[2], 10u);
    EXPECT_EQ(f[3], 56u);
    EXPECT_EQ(f[4], 346u);
}

TEST(Examples, ZpSums) {
    EXPECT_EQ(zp_sum(-16, PrimePower(5, 2)), 17u);
    EXPECT_THROW(zp_sum(35, PrimePower(7, 2)), NotApplicable);
    // 7 = 7 mod 8 lies in the vanishing class; the exact sum is 0 mod 49.
    EXPECT_EQ(*oracle::sum_mod(zp_spec(96), PrimePower(7, 2)), 0u);
    EXPECT_EQ(zp_sum(96, PrimePower(7, 2)), 0u);
}

TEST(Examples, FactorialFamilySums) {
    EXPECT_EQ(evaluate(factorial_spec(Family::Quartic, Fraction(1, 648)), PrimePower(7, 2)), 0u);
    EXPECT_EQ(evaluate(factorial_spec(Family::Cube2k3k, Fraction(1, 1458)), PrimePower(5, 2)), 0u);
    EXPECT_EQ(evaluate(factorial_spec(Family::Sextic, Fraction(1, 1728)), PrimePower(13, 2)), 10u);
}

TEST(Examples, GeneralizedBinomialSums) {
    EXPECT_EQ(genbinom_sum(Fraction(-1, 3), Fraction(-1, 6), Fraction(-4), PrimePower(7, 2), 6) % 7, 0u);
    EXPECT_EQ(genbinom_sum(Fraction(-1, 3), Fraction(-1, 3), Fraction(9), PrimePower(7, 2), 6), 6u);
    EXPECT_EQ(genbinom_sum(Fraction(-2, 7), Fraction(-1, 5), Fraction(3), PrimePower(11, 1), 0), 1u);
}

TEST(Examples, WeightedSums) {
    EXPECT_EQ(evaluate(weighted(zp_spec(16), 5, 2), PrimePower(7, 2)), 14u);
    EXPECT_EQ(evaluate(weighted(zp_spec(16), 0, 1), PrimePower(7, 2)), zp_sum(16, PrimePower(7, 2)));
    // (-15/11) = -1, so 8p(-15/p) = -88 = 33 mod 121.
    const auto w = weighted(factorial_spec(Family::Six3k, Fraction(1, -15 * 15 * 15)), 63, 8);
    EXPECT_EQ(jacobi(-15, 11), -1);
    EXPECT_EQ(*oracle::sum_mod(w, PrimePower(11, 2)), 33u);
    EXPECT_EQ(evaluate(w, PrimePower(11, 2)), 33u);
}

TEST(Examples, LegendrePolynomial) {
    EXPECT_EQ(legendre_poly_eval(0, 5, 101), 1u);
    EXPECT_EQ(legendre_poly_eval(1, 5, 101), 5u);
    EXPECT_EQ(legendre_poly_eval(2, 3, 101), 13u);
}
