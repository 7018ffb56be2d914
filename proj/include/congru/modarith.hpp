#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace congru {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// A residue is always relative to some ambient modulus; values live in [0, m).
using Residue = u64;

struct NotAUnit : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonResidue : std::domain_error {
    using std::domain_error::domain_error;
};
struct NegativeValuation : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotApplicable : std::domain_error {
    using std::domain_error::domain_error;
};

struct PrimePower {
    u64 p = 3;
    int e = 1;
    u64 m = 3;

    PrimePower() = default;
    // Throws std::invalid_argument unless p is an odd prime, 1 <= e <= 3 and p^e < 2^63.
    PrimePower(u64 p, int e);

    PrimePower with_exp(int e2) const { return PrimePower(p, e2); }
    bool operator==(const PrimePower&) const = default;
};

bool is_prime(u64 n);

inline Residue reduce(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return r < 0 ? static_cast<Residue>(r + static_cast<i64>(m)) : static_cast<Residue>(r);
}
inline Residue reduce128(i128 a, u64 m) {
    i128 r = a % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<Residue>(r);
}
inline Residue mul_mod(Residue a, Residue b, u64 m) {
    return static_cast<Residue>(static_cast<u128>(a) * b % m);
}
inline Residue add_mod(Residue a, Residue b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}
inline Residue sub_mod(Residue a, Residue b, u64 m) {
    return a >= b ? a - b : a + m - b;
}
inline Residue neg_mod(Residue a, u64 m) { return a == 0 ? 0 : m - a; }

Residue pow_mod(Residue base, u64 exp, u64 m);
Residue pow_mod(Residue base, u64 exp, const PrimePower& pp);

// Inverse modulo an arbitrary modulus; throws NotAUnit when gcd(a, m) > 1.
Residue inv_mod(Residue a, u64 m);
Residue inv_mod(Residue a, const PrimePower& pp);

// num/den mod p^e for a p-unit denominator.
Residue frac_mod(i64 num, i64 den, const PrimePower& pp);

int jacobi(i64 a, i64 n);

// Smallest square root in [0, (p-1)/2].
Residue sqrt_mod_p(Residue a, u64 p);

// Strip p from t; returns the exponent and leaves the cofactor in t.
int strip(i64& t, u64 p);

u64 factorial_nu(u64 n, u64 p);
Residue factorial_unit(u64 n, const PrimePower& pp);

// p^nu * unit; the unit is exact modulo p^(e - nu).
struct ScaledResidue {
    int nu = 0;
    Residue unit = 1;

    static ScaledResidue zero(const PrimePower& pp) { return {pp.e, 1}; }
    static ScaledResidue from_int(i64 v, const PrimePower& pp);

    bool is_zero(const PrimePower& pp) const { return nu >= pp.e; }
    Residue value(const PrimePower& pp) const;
    ScaledResidue canonical(const PrimePower& pp) const;

    ScaledResidue mul(const ScaledResidue& o, const PrimePower& pp) const;
    ScaledResidue add(const ScaledResidue& o, const PrimePower& pp) const;
    ScaledResidue neg(const PrimePower& pp) const;

    bool same_class(const ScaledResidue& o, const PrimePower& pp) const;
};

ScaledResidue factorial_quotient(const std::vector<u64>& numerators,
                                 const std::vector<u64>& denominators,
                                 const PrimePower& pp);

// Signed representative in (-m/2, m/2], for display.
i64 centered(Residue r, u64 m);

}  // namespace congru
