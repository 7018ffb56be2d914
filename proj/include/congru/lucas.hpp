#pragma once

#include <vector>

#include "congru/modarith.hpp"

namespace congru {

struct LucasPair {
    Residue u = 0;
    Residue v = 2;
    Residue cpow = 1;
    u64 n = 0;
    i64 b = 0, c = 0;
};

// U_n(b,c), V_n(b,c) mod m by doubling.
LucasPair lucas_uv(i64 b, i64 c, u64 n, u64 m);
inline LucasPair lucas_uv(i64 b, i64 c, u64 n, const PrimePower& pp) { return lucas_uv(b, c, n, pp.m); }

// k = 0..n_max by the linear recurrence.
std::vector<LucasPair> lucas_stream(i64 b, i64 c, u64 n_max, u64 m);
inline std::vector<LucasPair> lucas_stream(i64 b, i64 c, u64 n_max, const PrimePower& pp) {
    return lucas_stream(b, c, n_max, pp.m);
}

}  // namespace congru
