#include <gtest/gtest.h>

#include "congru/quadform.hpp"

using namespace congru;

namespace {

std::vector<std::pair<i64, i64>> brute(i64 N, i64 a, i64 b) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 y = 0; b * y * y <= N; ++y)
        for (i64 x = 0; a * x * x + b * y * y <= N; ++x)
            if (a * x * x + b * y * y == N) out.push_back({x, y});
    return out;
}

}  // namespace

TEST(QuadForm, RepresentMatchesBruteForce) {
    for (i64 N = 1; N < 1500; ++N) {
        for (auto [a, b] : {std::pair<i64, i64>{1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 7}, {3, 5}, {1, 51}, {17, 3}}) {
            auto got = represent(N, a, b);
            auto want = brute(N, a, b);
            ASSERT_EQ(got.size(), want.size()) << N << " " << a << " " << b;
            for (size_t i = 0; i < got.size(); ++i) {
                EXPECT_EQ(got[i].x, want[i].first);
                EXPECT_EQ(got[i].y, want[i].second);
            }
        }
    }
}

TEST(QuadForm, CornacchiaFindsPrimitiveSolution) {
    for (i64 p = 3; p < 5000; ++p) {
        if (!is_prime(static_cast<u64>(p))) continue;
        for (i64 b : {1, 2, 3, 7, 11, 17}) {
            if (b == p) continue;
            auto r = cornacchia(p, b);
            const bool exists = !brute(p, 1, b).empty();
            ASSERT_EQ(r.has_value(), exists) << p << " " << b;
            if (r) EXPECT_EQ(r->x * r->x + b * r->y * r->y, p);
        }
    }
}

// Property: for p = 1 mod 4, c = 1 mod 4 and the odd part of d is 1 mod 4.
TEST(QuadForm, TwoSquaresNormalization) {
    for (i64 p = 5; p < 20000; p += 4) {
        if (!is_prime(static_cast<u64>(p))) continue;
        auto [c, d] = two_squares_normalized(p);
        EXPECT_EQ(c * c + d * d, p);
        EXPECT_EQ(((c % 4) + 4) % 4, 1) << p;
        i64 t = d;
        while (t % 2 == 0) t /= 2;
        EXPECT_EQ(((t % 4) + 4) % 4, 1) << p;
    }
}

TEST(QuadForm, TwoAdicHelpers) {
    EXPECT_EQ(v2(48), 4);
    EXPECT_EQ(normalize_odd_part_sign(-12), -12);
    EXPECT_EQ(normalize_odd_part_sign(12), -12);
    EXPECT_EQ(normalize_odd_part_sign(5), 5);
    auto s = two_adic_split(-40);
    EXPECT_EQ(s.alpha, 3);
    EXPECT_EQ(s.t0 * (1 << s.alpha), s.t);
    EXPECT_EQ(isqrt(99), 9);
    EXPECT_EQ(isqrt(100), 10);
}
