#include <gtest/gtest.h>
#include <gmpxx.h>

#include "congru/lucas.hpp"

using namespace congru;

TEST(Lucas, SmallValues) {
    // Fibonacci and Lucas numbers
    const auto f = lucas_uv(1, -1, 10, 1000003);
    EXPECT_EQ(f.u, 55u);
    EXPECT_EQ(f.v, 123u);
    const auto z = lucas_uv(3, 2, 0, 97);
    EXPECT_EQ(z.u, 0u);
    EXPECT_EQ(z.v, 2u);
}

TEST(Lucas, DoublingMatchesExactRecurrence) {
    for (auto [b, c] : {std::pair<i64, i64>{1, -1}, {4, 1}, {16, 1}, {-7, 3}, {2, 9}}) {
        mpz_class u0 = 0, u1 = 1, v0 = 2, v1 = b;
        for (u64 n = 0; n <= 400; ++n) {
            for (u64 m : {13ULL, 169ULL, 2197ULL, 1000000007ULL * 3ULL}) {
                const auto d = lucas_uv(b, c, n, m);
                mpz_class eu = u0 % static_cast<unsigned long>(m), ev = v0 % static_cast<unsigned long>(m);
                if (eu < 0) eu += static_cast<unsigned long>(m);
                if (ev < 0) ev += static_cast<unsigned long>(m);
                ASSERT_EQ(d.u, eu.get_ui()) << n;
                ASSERT_EQ(d.v, ev.get_ui()) << n;
            }
            mpz_class u2 = b * u1 - c * u0, v2 = b * v1 - c * v0;
            u0 = u1, u1 = u2, v0 = v1, v1 = v2;
        }
    }
}

// Properties: U_2n = U_n V_n and V_n^2 - D U_n^2 = 4 c^n.
TEST(Lucas, DoublingIdentities) {
    const u64 m = 1000003;
    for (i64 b : {1, 3, 16}) {
        const i64 c = -2;
        const i64 D = b * b - 4 * c;
        auto s = lucas_stream(b, c, 600, m);
        for (u64 n = 0; n <= 300; ++n) {
            EXPECT_EQ(s[2 * n].u, mul_mod(s[n].u, s[n].v, m));
            const Residue lhs = sub_mod(mul_mod(s[n].v, s[n].v, m), mul_mod(reduce(D, m), mul_mod(s[n].u, s[n].u, m), m), m);
            EXPECT_EQ(lhs, mul_mod(4, pow_mod(reduce(c, m), n, m), m));
        }
    }
}

TEST(Lucas, StreamAgreesWithDoubling) {
    const PrimePower pp(101, 3);
    auto s = lucas_stream(5, 7, 1000, pp);
    for (u64 n = 0; n <= 1000; n += 37) {
        auto d = lucas_uv(5, 7, n, pp);
        EXPECT_EQ(s[n].u, d.u);
        EXPECT_EQ(s[n].v, d.v);
    }
}
