#include "congru/modarith.hpp"

#include <numeric>

namespace congru {

PrimePower::PrimePower(u64 p_, int e_) : p(p_), e(e_), m(1) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus base must be an odd prime");
    if (e < 1 || e > 3) throw std::invalid_argument("exponent must be 1, 2 or 3");
    u128 acc = 1;
    for (int i = 0; i < e; ++i) {
        acc *= p;
        if (acc >= (static_cast<u128>(1) << 63)) throw std::invalid_argument("p^e exceeds 2^63");
    }
    m = static_cast<u64>(acc);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (a % n == 0) continue;
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

Residue pow_mod(Residue base, u64 exp, u64 m) {
    Residue r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

Residue pow_mod(Residue base, u64 exp, const PrimePower& pp) { return pow_mod(base, exp, pp.m); }

Residue inv_mod(Residue a, u64 m) {
    i128 r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i128 q = r0 / r1;
        i128 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1) throw NotAUnit("value is not invertible modulo " + std::to_string(m));
    return reduce128(t0, m);
}

Residue inv_mod(Residue a, const PrimePower& pp) {
    if (a % pp.p == 0) throw NotAUnit("p divides " + std::to_string(a));
    return inv_mod(a, pp.m);
}

Residue frac_mod(i64 num, i64 den, const PrimePower& pp) {
    Residue d = reduce(den, pp.m);
    return mul_mod(reduce(num, pp.m), inv_mod(d, pp), pp.m);
}

int jacobi(i64 a_in, i64 n_in) {
    if (n_in <= 0 || (n_in & 1) == 0) throw std::invalid_argument("jacobi needs a positive odd modulus");
    u64 n = static_cast<u64>(n_in);
    u64 a = reduce(a_in, n);
    int t = 1;
    while (a != 0) {
        int z = __builtin_ctzll(a);
        a >>= z;
        if ((z & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? t : 0;
}

Residue sqrt_mod_p(Residue a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (jacobi(static_cast<i64>(a), static_cast<i64>(p)) != 1)
        throw NonResidue(std::to_string(a) + " is not a square mod " + std::to_string(p));
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (jacobi(static_cast<i64>(z), static_cast<i64>(p)) != -1) ++z;
    Residue c = pow_mod(z, q, p);
    Residue r = pow_mod(a, (q + 1) / 2, p);
    Residue t = pow_mod(a, q, p);
    int mm = s;
    while (t != 1) {
        int i = 0;
        Residue tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        Residue b = c;
        for (int j = 0; j < mm - i - 1; ++j) b = mul_mod(b, b, p);
        r = mul_mod(r, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        mm = i;
    }
    return std::min(r, p - r);
}

int strip(i64& t, u64 p) {
    if (t == 0) return 0;
    int k = 0;
    i64 ps = static_cast<i64>(p);
    while (t % ps == 0) {
        t /= ps;
        ++k;
    }
    return k;
}

u64 factorial_nu(u64 n, u64 p) {
    u64 nu = 0;
    while (n) {
        n /= p;
        nu += n;
    }
    return nu;
}

Residue factorial_unit(u64 n, const PrimePower& pp) {
    Residue w = 1;
    while (n > 1) {
        for (u64 j = 2; j <= n; ++j)
            if (j % pp.p) w = mul_mod(w, j % pp.m, pp.m);
        n /= pp.p;
    }
    return w;
}

ScaledResidue ScaledResidue::from_int(i64 v, const PrimePower& pp) {
    if (v == 0) return zero(pp);
    int nu = strip(v, pp.p);
    return ScaledResidue{nu, reduce(v, pp.m)}.canonical(pp);
}

Residue ScaledResidue::value(const PrimePower& pp) const {
    if (nu >= pp.e) return 0;
    if (nu < 0) throw NegativeValuation("value with negative valuation");
    return mul_mod(pow_mod(pp.p, nu, pp.m), unit, pp.m);
}

ScaledResidue ScaledResidue::canonical(const PrimePower& pp) const {
    if (nu >= pp.e) return zero(pp);
    return *this;
}

ScaledResidue ScaledResidue::mul(const ScaledResidue& o, const PrimePower& pp) const {
    return ScaledResidue{nu + o.nu, mul_mod(unit, o.unit, pp.m)}.canonical(pp);
}

ScaledResidue ScaledResidue::neg(const PrimePower& pp) const {
    if (is_zero(pp)) return zero(pp);
    return {nu, neg_mod(unit, pp.m)};
}

ScaledResidue ScaledResidue::add(const ScaledResidue& o, const PrimePower& pp) const {
    if (is_zero(pp)) return o.canonical(pp);
    if (o.is_zero(pp)) return canonical(pp);
    const ScaledResidue& lo = nu <= o.nu ? *this : o;
    const ScaledResidue& hi = nu <= o.nu ? o : *this;
    Residue s = add_mod(lo.unit, mul_mod(pow_mod(pp.p, hi.nu - lo.nu, pp.m), hi.unit, pp.m), pp.m);
    int v = lo.nu;
    while (v < pp.e && s % pp.p == 0) {
        if (s == 0) return zero(pp);
        s /= pp.p;
        ++v;
    }
    return ScaledResidue{v, s}.canonical(pp);
}

bool ScaledResidue::same_class(const ScaledResidue& o, const PrimePower& pp) const {
    return value(pp) == o.value(pp);
}

ScaledResidue factorial_quotient(const std::vector<u64>& numerators,
                                 const std::vector<u64>& denominators,
                                 const PrimePower& pp) {
    i64 nu = 0;
    Residue num = 1, den = 1;
    for (u64 n : numerators) {
        nu += static_cast<i64>(factorial_nu(n, pp.p));
        num = mul_mod(num, factorial_unit(n, pp), pp.m);
    }
    for (u64 d : denominators) {
        nu -= static_cast<i64>(factorial_nu(d, pp.p));
        den = mul_mod(den, factorial_unit(d, pp), pp.m);
    }
    if (nu < 0) throw NegativeValuation("factorial quotient is not p-integral");
    if (nu >= pp.e) return ScaledResidue::zero(pp);
    return ScaledResidue{static_cast<int>(nu), mul_mod(num, inv_mod(den, pp), pp.m)};
}

i64 centered(Residue r, u64 m) {
    return r > m / 2 ? static_cast<i64>(r) - static_cast<i64>(m) : static_cast<i64>(r);
}

}  // namespace congru
