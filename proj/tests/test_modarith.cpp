#include <gtest/gtest.h>
#include <gmpxx.h>

#include <random>

#include "congru/modarith.hpp"

using namespace congru;

TEST(ModArith, IsPrimeMatchesSieve) {
    const u64 N = 20000;
    std::vector<bool> comp(N, false);
    for (u64 i = 2; i * i < N; ++i)
        if (!comp[i])
            for (u64 j = i * i; j < N; j += i) comp[j] = true;
    for (u64 n = 0; n < N; ++n) EXPECT_EQ(is_prime(n), n >= 2 && !comp[n]) << n;
}

TEST(ModArith, IsPrimeLargeValues) {
    EXPECT_TRUE(is_prime(999999937ULL));
    EXPECT_TRUE(is_prime(2305843009213693951ULL));
    EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
    EXPECT_FALSE(is_prime(999999937ULL * 3));
}

TEST(ModArith, PrimePowerValidation) {
    EXPECT_EQ(PrimePower(13, 2).m, 169u);
    EXPECT_THROW(PrimePower(15, 1), std::invalid_argument);
    EXPECT_THROW(PrimePower(2, 1), std::invalid_argument);
    EXPECT_THROW(PrimePower(13, 4), std::invalid_argument);
    EXPECT_THROW(PrimePower(3000017, 3), std::invalid_argument);
}

TEST(ModArith, InverseAndFraction) {
    const PrimePower pp(7, 3);
    for (Residue a = 1; a < pp.m; ++a) {
        if (a % 7 == 0) {
            EXPECT_THROW(inv_mod(a, pp), NotAUnit);
            continue;
        }
        EXPECT_EQ(mul_mod(a, inv_mod(a, pp), pp.m), 1u);
    }
    EXPECT_EQ(frac_mod(1, 2, PrimePower(5, 2)), 13u);
    EXPECT_EQ(frac_mod(-3, 4, PrimePower(5, 1)), 3u);
    EXPECT_THROW(frac_mod(1, 10, PrimePower(5, 1)), NotAUnit);
}

TEST(ModArith, JacobiMatchesEulerCriterion) {
    for (u64 p : {3, 5, 7, 11, 13, 101, 1009}) {
        for (i64 a = -50; a <= 50; ++a) {
            const Residue r = reduce(a, p);
            int euler = r == 0 ? 0 : (pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1);
            EXPECT_EQ(jacobi(a, static_cast<i64>(p)), euler) << a << " " << p;
        }
    }
    EXPECT_EQ(jacobi(2, 15), 1);
    EXPECT_EQ(jacobi(7, 15), -1);
}

TEST(ModArith, SqrtModP) {
    for (u64 p : {3, 5, 13, 17, 97, 1009, 40961}) {
        for (Residue a = 1; a < std::min<u64>(p, 300); ++a) {
            if (jacobi(static_cast<i64>(a), static_cast<i64>(p)) != 1) continue;
            const Residue r = sqrt_mod_p(a, p);
            EXPECT_EQ(mul_mod(r, r, p), a);
            EXPECT_LE(r, (p - 1) / 2);
        }
    }
}

TEST(ModArith, FactorialAgainstBigIntegers) {
    mpz_class f = 1;
    for (u64 n = 0; n <= 300; ++n) {
        if (n) f *= static_cast<unsigned long>(n);
        for (u64 p : {3, 5, 7, 31}) {
            mpz_class unit;
            const u64 nu = mpz_remove(unit.get_mpz_t(), f.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
            EXPECT_EQ(factorial_nu(n, p), nu);
            const PrimePower pp(p, 3);
            mpz_class r = unit % static_cast<unsigned long>(pp.m);
            EXPECT_EQ(factorial_unit(n, pp), r.get_ui()) << n << " " << p;
        }
    }
}

TEST(ModArith, ScaledResidueArithmetic) {
    const PrimePower pp(5, 3);
    auto a = ScaledResidue::from_int(50, pp);  // 5^2 * 2
    EXPECT_EQ(a.nu, 2);
    EXPECT_EQ(a.value(pp), 50u);
    auto b = ScaledResidue::from_int(5, pp);
    EXPECT_TRUE(a.mul(b, pp).is_zero(pp));
    EXPECT_EQ(a.add(b, pp).value(pp), 55u);
    EXPECT_EQ(a.neg(pp).value(pp), 75u);
}

// Property: value(p^nu u) matches the product of exact factorials for random quotients.
TEST(ModArith, FactorialQuotientRandom) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        const u64 k = rng() % 60;
        const u64 p = std::vector<u64>{3, 5, 7, 11, 13}[rng() % 5];
        const int e = 1 + static_cast<int>(rng() % 3);
        const PrimePower pp(p, e);
        mpz_class num, d1, d2;
        mpz_fac_ui(num.get_mpz_t(), 4 * k);
        mpz_fac_ui(d1.get_mpz_t(), 2 * k);
        mpz_fac_ui(d2.get_mpz_t(), k);
        const mpz_class exact = num / (d1 * d2 * d2);
        const auto q = factorial_quotient({4 * k}, {2 * k, k, k}, pp);
        mpz_class r = exact % static_cast<unsigned long>(pp.m);
        EXPECT_EQ(q.value(pp), r.get_ui()) << k << " " << p << "^" << e;
    }
}

TEST(ModArith, Centered) {
    EXPECT_EQ(centered(12, 13), -1);
    EXPECT_EQ(centered(6, 13), 6);
    EXPECT_EQ(centered(7, 13), -6);
}
