#include "congru/quadform.hpp"

#include <cmath>
#include <stdexcept>

namespace congru {

i64 isqrt(i64 n) {
    if (n < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<QuadRep> represent(i64 N, i64 a, i64 b) {
    std::vector<QuadRep> out;
    if (N <= 0 || a <= 0 || b <= 0) return out;
    for (i64 y = 0; b * y * y <= N; ++y) {
        i64 r = N - b * y * y;
        if (r % a) continue;
        i64 s = isqrt(r / a);
        if (s * s == r / a) out.push_back({a, b, N, s, y});
    }
    return out;
}

std::optional<QuadRep> cornacchia(i64 p, i64 b) {
    if (b <= 0 || b >= p) return std::nullopt;
    const u64 up = static_cast<u64>(p);
    Residue r;
    try {
        r = sqrt_mod_p(reduce(-b, up), up);
    } catch (const NonResidue&) {
        return std::nullopt;
    }
    if (r == 0) return std::nullopt;
    i64 r0 = p, r1 = p - static_cast<i64>(r);
    const i64 lim = isqrt(p);
    while (r1 > lim) {
        i64 t = r0 % r1;
        r0 = r1;
        r1 = t;
    }
    i64 rest = p - r1 * r1;
    if (rest % b) return std::nullopt;
    i64 y = isqrt(rest / b);
    if (y * y != rest / b) return std::nullopt;
    return QuadRep{1, b, p, r1, y};
}

TwoSquares two_squares_normalized(i64 p) {
    if (p % 4 != 1 || !is_prime(static_cast<u64>(p)))
        throw std::logic_error("two_squares_normalized needs a prime p = 1 mod 4");
    auto rep = cornacchia(p, 1);
    if (!rep) throw std::logic_error("no two-square decomposition");
    i64 c = rep->x, d = rep->y;
    if (c % 2 == 0) std::swap(c, d);
    if (((c % 4) + 4) % 4 != 1) c = -c;
    return {c, normalize_odd_part_sign(d)};
}

TwoAdicSplit two_adic_split(i64 t) {
    if (t == 0) throw std::invalid_argument("two_adic_split of 0");
    TwoAdicSplit s{t, 0, t};
    while (s.t0 % 2 == 0) {
        s.t0 /= 2;
        ++s.alpha;
    }
    return s;
}

int v2(i64 t) { return two_adic_split(t).alpha; }

i64 normalize_odd_part_sign(i64 t) {
    i64 t0 = two_adic_split(t).t0;
    return ((t0 % 4) + 4) % 4 == 1 ? t : -t;
}

int delta(i64 t) { return t % 8 == 0 ? 1 : -1; }

}  // namespace congru
