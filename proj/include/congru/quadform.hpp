#pragma once

#include <optional>
#include <vector>

#include "congru/modarith.hpp"

namespace congru {

struct QuadRep {
    i64 a = 1, b = 1, N = 0;
    i64 x = 0, y = 0;
    bool operator==(const QuadRep&) const = default;
};

struct TwoAdicSplit {
    i64 t = 0;
    int alpha = 0;
    i64 t0 = 0;
};

// All solutions of a x^2 + b y^2 = N with x, y >= 0, ordered by y.
std::vector<QuadRep> represent(i64 N, i64 a, i64 b);

// Cornacchia for x^2 + b y^2 = p with p prime; primitive solution with x, y >= 0.
std::optional<QuadRep> cornacchia(i64 p, i64 b);

// p = c^2 + d^2 with c = 1 mod 4 and the odd part of d = 1 mod 4.
struct TwoSquares {
    i64 c, d;
};
TwoSquares two_squares_normalized(i64 p);

i64 normalize_odd_part_sign(i64 t);
int delta(i64 t);
TwoAdicSplit two_adic_split(i64 t);
int v2(i64 t);

i64 isqrt(i64 n);

}  // namespace congru
