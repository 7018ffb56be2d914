#include <gtest/gtest.h>

#include <random>

#include "congru/oracle.hpp"
#include "congru/sums.hpp"

using namespace congru;

TEST(Sums, ZpSpotValues) {
    EXPECT_EQ(zp_sum(-16, PrimePower(5, 2)), 17u);
    EXPECT_EQ(*oracle::sum_mod(zp_spec(-16), PrimePower(5, 2)), 17u);
    // Z_7(96) vanishes mod 49
    EXPECT_EQ(zp_sum(96, PrimePower(7, 2)), 0u);
    EXPECT_EQ(*oracle::sum_mod(zp_spec(96), PrimePower(7, 2)), 0u);
}

TEST(Sums, FranelSequence) {
    const PrimePower pp(97, 3);
    auto f = franel_sequence(pp);
    for (u64 n = 0; n < f.size(); n += 7) {
        mpz_class r = oracle::franel(n) % static_cast<unsigned long>(pp.m);
        EXPECT_EQ(f[n], r.get_ui());
    }
    EXPECT_EQ(f[3], 56u);
}

TEST(Sums, NotApplicableCases) {
    EXPECT_THROW(evaluate(zp_spec(14), PrimePower(7, 2)), NotApplicable);
    EXPECT_THROW(evaluate(factorial_spec(Family::Quartic, Fraction(1, 5)), PrimePower(5, 1)), NotApplicable);
    EXPECT_THROW(upper_index(Upper::Sixth, 11), NotApplicable);
    EXPECT_EQ(upper_index(Upper::SixthMinus5, 11), 1u);
    EXPECT_EQ(upper_index(Upper::FloorSixth, 37), 6u);
}

// Property: every engine path agrees with exact rational summation.
TEST(Sums, RandomSpecsMatchExactSums) {
    std::mt19937_64 rng(2024);
    const std::vector<Family> fams = {Family::Quartic, Family::Sextic,   Family::Six3k,
                                      Family::Cube2k3k, Family::Central1, Family::Central2,
                                      Family::Central3, Family::Binom6k3kSq, Family::Zp};
    const std::vector<u64> primes = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int it = 0; it < 400; ++it) {
        const u64 p = primes[rng() % primes.size()];
        const int e = 1 + static_cast<int>(rng() % 3);
        const PrimePower pp(p, e);
        i64 num = static_cast<i64>(rng() % 200) - 100, den = static_cast<i64>(rng() % 3000) + 1;
        if (num % static_cast<i64>(p) == 0) ++num;
        if (den % static_cast<i64>(p) == 0) ++den;
        SumSpec s;
        if (rng() % 4 == 0) {
            const i64 d1 = std::vector<i64>{2, 3, 4, 6}[rng() % 4], d2 = std::vector<i64>{2, 3, 4, 6}[rng() % 4];
            s = genbinom_spec(Fraction(-1 - static_cast<i64>(rng() % (d1 - 1)), d1),
                              Fraction(-1 - static_cast<i64>(rng() % (d2 - 1)), d2), Fraction(num, den));
        } else {
            s = factorial_spec(fams[rng() % fams.size()], Fraction(num, den));
        }
        if (rng() % 2) s = weighted(s, static_cast<i64>(rng() % 20) - 10, static_cast<i64>(rng() % 20) - 10);
        if (rng() % 3 == 0) s.upper = Upper::Half;
        const auto exact = oracle::sum_mod(s, pp);
        ASSERT_TRUE(exact.has_value());
        EXPECT_EQ(evaluate(s, pp), *exact) << family_name(s.family) << " p=" << p << " e=" << e;
    }
}

TEST(Sums, IncrementalTermsMatchDirectTerms) {
    const PrimePower pp(13, 3);
    for (Family f : {Family::Quartic, Family::Sextic, Family::Cube2k3k, Family::Central3, Family::Binom6k3kSq}) {
        const SumSpec s = factorial_spec(f, Fraction(1));
        auto inc = incremental_terms(s, pp, 12);
        for (u64 k = 0; k <= 12; ++k)
            EXPECT_TRUE(inc[k].same_class(direct_term(s, k, pp), pp)) << family_name(f) << " k=" << k;
    }
}

TEST(Sums, LegendrePolynomial) {
    for (u64 p : {7, 13, 101})
        for (u64 n : {0, 1, 2, 5, 25})
            if (n < p)
            for (Residue t : {0, 1, 3, 5}) EXPECT_EQ(legendre_poly_eval(n, t % p, p), oracle::legendre_poly(n, t % p, p));
}

TEST(Sums, CentralIdentityAgrees) {
    for (u64 p = 5; p < 400; ++p) {
        if (!is_prime(p)) continue;
        for (i64 m = 1; m <= 20; ++m) {
            const Residue r = static_cast<Residue>(m) % p;
            if (r == 0 || r == 16 % p || r == 64 % p) {
                EXPECT_THROW(central3_identity_values(m, p), NotApplicable);
                continue;
            }
            EXPECT_TRUE(central3_identity_check(m, p)) << m << " " << p;
        }
    }
}
