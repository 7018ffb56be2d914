#include "congru/sums.hpp"

#include <array>
#include <numeric>

namespace congru {

std::string family_name(Family f) {
    switch (f) {
        case Family::Quartic: return "QUARTIC";
        case Family::Sextic: return "SEXTIC";
        case Family::Six3k: return "SIX3K";
        case Family::Cube2k3k: return "CUBE2K3K";
        case Family::Central1: return "CENTRAL1";
        case Family::Central2: return "CENTRAL2";
        case Family::Central3: return "CENTRAL3";
        case Family::Binom6k3kSq: return "BINOM6K3K_SQ";
        case Family::Zp: return "ZP";
        case Family::GenBinom: return "GENBINOM";
    }
    return "?";
}

Fraction::Fraction(i64 n, i64 d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

u64 upper_index(Upper u, u64 p) {
    switch (u) {
        case Upper::PMinus1: return p - 1;
        case Upper::Half: return (p - 1) / 2;
        case Upper::Sixth:
            if ((p - 1) % 6) throw NotApplicable("(p-1)/6 is not an integer");
            return (p - 1) / 6;
        case Upper::SixthMinus5:
            if (p < 5 || (p - 5) % 6) throw NotApplicable("(p-5)/6 is not an integer");
            return (p - 5) / 6;
        case Upper::FloorSixth: return p / 6;
    }
    return 0;
}

SumSpec factorial_spec(Family f, Fraction x, Upper u) {
    SumSpec s;
    s.family = f;
    s.x = x;
    s.upper = u;
    return s;
}

SumSpec zp_spec(i64 m) { return factorial_spec(Family::Zp, Fraction(1, m)); }

SumSpec genbinom_spec(Fraction r1, Fraction r2, Fraction x, Upper u) {
    SumSpec s = factorial_spec(Family::GenBinom, x, u);
    s.r1 = r1;
    s.r2 = r2;
    return s;
}

SumSpec weighted(SumSpec s, i64 a, i64 b) {
    s.wa = a;
    s.wb = b;
    return s;
}

namespace {

struct Mult {
    int nu = 0;
    Residue unit = 1;
    bool zero = false;
};

Mult mult_from_fraction(const Fraction& x, const PrimePower& pp) {
    if (x.num == 0) return {0, 0, true};
    if (x.den % static_cast<i64>(pp.p) == 0) throw NotApplicable("p divides a denominator of the multiplier");
    i64 n = x.num;
    int v = strip(n, pp.p);
    return {v, frac_mod(n, x.den, pp), false};
}

Mult mult_from_residue(Residue x, const PrimePower& pp) {
    x %= pp.m;
    if (x == 0) return {0, 0, true};
    int v = 0;
    while (x % pp.p == 0) {
        x /= pp.p;
        ++v;
    }
    return {v, x, false};
}

struct Step {
    std::array<i64, 12> num;
    std::array<i64, 12> den;
    int nn = 0, nd = 0;
};

struct Ratio {
    Family f;
    i64 a1 = 0, b1 = 1, a2 = 0, b2 = 1;

    void operator()(i64 k, Step& s) const {
        s.nn = s.nd = 0;
        auto n = [&](i64 v) { s.num[s.nn++] = v; };
        auto d = [&](i64 v) { s.den[s.nd++] = v; };
        auto kk = [&](int times) {
            for (int i = 0; i < times; ++i) d(k + 1);
        };
        switch (f) {
            case Family::Quartic:
                for (int j = 1; j <= 4; ++j) n(4 * k + j);
                kk(4);
                break;
            case Family::Sextic:
            case Family::Six3k:
                for (int j = 1; j <= 6; ++j) n(6 * k + j);
                for (int j = 1; j <= 3; ++j) d(3 * k + j);
                kk(3);
                break;
            case Family::Cube2k3k:
                n(2 * k + 1), n(2 * k + 2);
                for (int j = 1; j <= 3; ++j) n(3 * k + j);
                kk(5);
                break;
            case Family::Central1:
            case Family::Zp:
                n(2 * k + 1), n(2 * k + 2);
                kk(2);
                break;
            case Family::Central2:
                for (int i = 0; i < 2; ++i) n(2 * k + 1), n(2 * k + 2);
                kk(4);
                break;
            case Family::Central3:
                for (int i = 0; i < 3; ++i) n(2 * k + 1), n(2 * k + 2);
                kk(6);
                break;
            case Family::Binom6k3kSq:
                for (int i = 0; i < 2; ++i)
                    for (int j = 1; j <= 6; ++j) n(6 * k + j);
                for (int i = 0; i < 4; ++i)
                    for (int j = 1; j <= 3; ++j) d(3 * k + j);
                break;
            case Family::GenBinom:
                n(a1 - k * b1), n(a2 - k * b2);
                kk(2);
                break;
        }
    }
};

// Core engine. Terms follow t_{k+1} = t_k * x * prod(num)/prod(den); p-powers are
// pulled out of each integer factor so the unit never gets divided by p.
Residue run(const Ratio& ratio, const Mult& x, u64 K, const PrimePower& pp, const std::vector<Residue>* inner,
            i64 wa, i64 wb, std::vector<ScaledResidue>* terms) {
    const u64 M = pp.m, p = pp.p;
    if (inner && inner->size() <= K) throw std::invalid_argument("inner sequence too short");
    auto weight = [&](u64 k) -> Residue {
        if (wa == 0 && wb == 1) return 1;
        return reduce128(static_cast<i128>(wa) * static_cast<i128>(k) + wb, M);
    };
    auto inner_at = [&](u64 k) -> Residue { return inner ? (*inner)[k] % M : 1; };

    if (x.zero) {
        if (terms) {
            terms->assign(K + 1, ScaledResidue::zero(pp));
            (*terms)[0] = {0, 1 % M};
        }
        return mul_mod(weight(0), inner_at(0), M);
    }

    u64 steps = K;
    std::vector<Residue> nums(K), dens(K);
    std::vector<int> dnu(K);
    Step s;
    for (u64 k = 0; k < K; ++k) {
        ratio(static_cast<i64>(k), s);
        Residue nu_ = 1, du = 1;
        int v = 0;
        bool dead = false;
        for (int i = 0; i < s.nn; ++i) {
            i64 t = s.num[i];
            if (t == 0) {
                dead = true;
                break;
            }
            v += strip(t, p);
            nu_ = mul_mod(nu_, reduce(t, M), M);
        }
        if (dead) {
            steps = k;
            break;
        }
        for (int i = 0; i < s.nd; ++i) {
            i64 t = s.den[i];
            v -= strip(t, p);
            du = mul_mod(du, reduce(t, M), M);
        }
        nums[k] = mul_mod(nu_, x.unit, M);
        dens[k] = du;
        dnu[k] = v + x.nu;
    }

    // Batch inversion of the denominator units.
    if (steps > 0) {
        std::vector<Residue> pre(steps);
        Residue acc = 1;
        for (u64 k = 0; k < steps; ++k) {
            acc = mul_mod(acc, dens[k], M);
            pre[k] = acc;
        }
        Residue inv = inv_mod(acc, pp);
        for (u64 k = steps; k-- > 0;) {
            Residue ik = k ? mul_mod(inv, pre[k - 1], M) : inv;
            inv = mul_mod(inv, dens[k], M);
            dens[k] = ik;
        }
    }

    std::array<Residue, 4> ppow{};
    ppow[0] = 1 % M;
    for (int i = 1; i < 4; ++i) ppow[i] = i < pp.e ? mul_mod(ppow[i - 1], p, M) : 0;

    if (terms) terms->assign(K + 1, ScaledResidue::zero(pp));
    int nu = 0;
    Residue u = 1 % M, sum = 0;
    for (u64 k = 0; k <= steps; ++k) {
        if (nu < 0) throw NegativeValuation("term with negative valuation");
        if (nu < pp.e) {
            Residue t = mul_mod(ppow[nu], u, M);
            if (terms) (*terms)[k] = ScaledResidue{nu, u};
            t = mul_mod(t, weight(k), M);
            t = mul_mod(t, inner_at(k), M);
            sum = add_mod(sum, t, M);
        }
        if (k == steps) break;
        nu += dnu[k];
        u = mul_mod(mul_mod(u, nums[k], M), dens[k], M);
    }
    return sum;
}

Ratio ratio_for(const SumSpec& spec, const PrimePower& pp, Fraction& x) {
    Ratio r{spec.family};
    x = spec.x;
    if (spec.family == Family::GenBinom) {
        const i64 p = static_cast<i64>(pp.p);
        if (spec.r1.den % p == 0 || spec.r2.den % p == 0)
            throw NotApplicable("p divides a denominator of a binomial argument");
        r.a1 = spec.r1.num, r.b1 = spec.r1.den, r.a2 = spec.r2.num, r.b2 = spec.r2.den;
        x = Fraction(spec.x.num, spec.x.den * r.b1 * r.b2);
    }
    return r;
}

// Inverses of 1..n mod M for n < p.
std::vector<Residue> small_inverses(u64 n, u64 M) {
    std::vector<Residue> inv(n + 1, 0);
    if (n >= 1) inv[1] = 1 % M;
    for (u64 i = 2; i <= n; ++i) inv[i] = mul_mod(M - M / i, inv[M % i], M);
    return inv;
}

}  // namespace

std::vector<Residue> franel_sequence(const PrimePower& pp) {
    const u64 p = pp.p, M = pp.m;
    std::vector<Residue> f(p);
    f[0] = 1 % M;
    if (p > 1) f[1] = 2 % M;
    auto inv = small_inverses(p - 1, M);
    for (u64 n = 1; n + 1 < p; ++n) {
        Residue a = reduce128(static_cast<i128>(7) * n * n + 7 * n + 2, M);
        Residue b = reduce128(static_cast<i128>(8) * n * n, M);
        Residue num = add_mod(mul_mod(a, f[n], M), mul_mod(b, f[n - 1], M), M);
        Residue i1 = inv[n + 1];
        f[n + 1] = mul_mod(num, mul_mod(i1, i1, M), M);
    }
    return f;
}

Residue evaluate(const SumSpec& spec, const PrimePower& pp, const std::vector<Residue>* franel) {
    const u64 K = upper_index(spec.upper, pp.p);
    Fraction x;
    Ratio r = ratio_for(spec, pp, x);
    Mult mx = mult_from_fraction(x, pp);
    if (spec.family == Family::Zp) {
        if (mx.nu != 0) throw NotApplicable("p divides m");
        if (franel) return run(r, mx, K, pp, franel, spec.wa, spec.wb, nullptr);
        auto f = franel_sequence(pp);
        return run(r, mx, K, pp, &f, spec.wa, spec.wb, nullptr);
    }
    return run(r, mx, K, pp, nullptr, spec.wa, spec.wb, nullptr);
}

Residue family_sum(Family f, Residue x, u64 K, const PrimePower& pp, const std::vector<Residue>* inner, i64 wa,
                   i64 wb) {
    if (f == Family::GenBinom) throw std::invalid_argument("family_sum does not take binomial arguments");
    return run(Ratio{f}, mult_from_residue(x, pp), K, pp, inner, wa, wb, nullptr);
}

std::vector<ScaledResidue> incremental_terms(const SumSpec& spec, const PrimePower& pp, u64 K) {
    Fraction x;
    Ratio r = ratio_for(spec, pp, x);
    std::vector<ScaledResidue> terms;
    run(r, mult_from_fraction(x, pp), K, pp, nullptr, 0, 1, &terms);
    return terms;
}

ScaledResidue direct_term(const SumSpec& spec, u64 k, const PrimePower& pp) {
    std::vector<u64> n, d;
    auto rep = [](std::vector<u64>& v, u64 val, int times) {
        for (int i = 0; i < times; ++i) v.push_back(val);
    };
    switch (spec.family) {
        case Family::Quartic: n = {4 * k}, rep(d, k, 4); break;
        case Family::Sextic:
        case Family::Six3k: n = {6 * k}, d = {3 * k}, rep(d, k, 3); break;
        case Family::Cube2k3k: n = {2 * k, 3 * k}, rep(d, k, 5); break;
        case Family::Central1:
        case Family::Zp: n = {2 * k}, rep(d, k, 2); break;
        case Family::Central2: rep(n, 2 * k, 2), rep(d, k, 4); break;
        case Family::Central3: rep(n, 2 * k, 3), rep(d, k, 6); break;
        case Family::Binom6k3kSq: rep(n, 6 * k, 2), rep(d, 3 * k, 4); break;
        case Family::GenBinom: throw std::invalid_argument("no factorial form for generalized binomials");
    }
    ScaledResidue c = factorial_quotient(n, d, pp);
    Mult mx = mult_from_fraction(spec.x, pp);
    if (mx.zero) return k == 0 ? c : ScaledResidue::zero(pp);
    ScaledResidue xk{static_cast<int>(mx.nu * k), pow_mod(mx.unit, k, pp)};
    return c.mul(xk.canonical(pp), pp);
}

Residue zp_sum(i64 m, const PrimePower& pp) {
    if (m % static_cast<i64>(pp.p) == 0) throw NotApplicable("p divides m");
    return evaluate(zp_spec(m), pp);
}

Residue factorial_sum(const SumSpec& spec, const PrimePower& pp) { return evaluate(spec, pp); }

Residue genbinom_sum(Fraction r, Fraction s, Fraction x, const PrimePower& pp, u64 upper) {
    if (upper >= pp.p) throw std::invalid_argument("upper index must be below p");
    SumSpec spec = genbinom_spec(r, s, x);
    Fraction xx;
    Ratio rr = ratio_for(spec, pp, xx);
    return run(rr, mult_from_fraction(xx, pp), upper, pp, nullptr, 0, 1, nullptr);
}

Residue weighted_sum(const SumSpec& spec, const PrimePower& pp) { return evaluate(spec, pp); }

Residue legendre_poly_eval(u64 n, Residue t, u64 p) {
    if (n >= p) throw std::invalid_argument("legendre_poly_eval needs n < p");
    t %= p;
    if (n == 0) return 1 % p;
    auto inv = small_inverses(n, p);
    Residue p0 = 1, p1 = t;
    for (u64 k = 1; k < n; ++k) {
        Residue a = mul_mod(mul_mod((2 * k + 1) % p, t, p), p1, p);
        Residue b = mul_mod(k % p, p0, p);
        Residue nx = mul_mod(sub_mod(a, b, p), inv[k + 1], p);
        p0 = p1;
        p1 = nx;
    }
    return p1;
}

std::vector<signed char> quadratic_character(u64 p) {
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (u64 i = 1; i <= p / 2; ++i) chi[mul_mod(i, i, p)] = 1;
    return chi;
}

i64 cubic_char_sum(Residue a, Residue b, u64 p, const std::vector<signed char>& chi) {
    i64 s = 0;
    a %= p;
    b %= p;
    for (u64 x = 0; x < p; ++x) {
        Residue v = add_mod(mul_mod(mul_mod(x, x, p), x, p), add_mod(mul_mod(a, x, p), b, p), p);
        s += chi[v];
    }
    return s;
}

i64 cubic_char_sum(i64 a, i64 b, u64 p) {
    i64 s = 0;
    for (u64 x = 0; x < p; ++x) {
        Residue v = add_mod(mul_mod(mul_mod(x, x, p), x, p), add_mod(mul_mod(reduce(a, p), x, p), reduce(b, p), p), p);
        s += jacobi(static_cast<i64>(v), static_cast<i64>(p));
    }
    return s;
}

bool Central3Values::agree() const {
    return half_sum == legendre && legendre == char_sum && char_sum == sextic_short && sextic_short == sextic_full;
}

Central3Values central3_identity_values(i64 m, u64 p, const std::vector<signed char>* chi) {
    if (p <= 3) throw NotApplicable("needs p > 3");
    const PrimePower pp(p, 1);
    const Residue mr = reduce(m, p);
    if (mr == 0 || mr == 16 % p || mr == 64 % p) throw NotApplicable("m = 0, 16 or 64 mod p");
    auto sign = [&](int s, Residue v) { return s >= 0 ? v : neg_mod(v, p); };

    Central3Values out;
    out.half_sum = family_sum(Family::Central3, inv_mod(mr, pp), (p - 1) / 2, pp);

    const Residue t = mul_mod((mr + 64) % p, inv_mod(sub_mod(mr, 64 % p, p), pp), p);
    const int s1 = jacobi(static_cast<i64>(mul_mod(mr, sub_mod(mr, 64 % p, p), p)), static_cast<i64>(p));
    const Residue P = legendre_poly_eval(p / 4, t, p);
    out.legendre = sign(s1, mul_mod(P, P, p));

    const Residue three_t5 = add_mod(mul_mod(3, t, p), 5 % p, p);
    const Residue a = neg_mod(mul_mod(frac_mod(3, 2, pp), three_t5, p), p);
    const Residue b = add_mod(mul_mod(9, t, p), 7 % p, p);
    i64 cs;
    if (chi) {
        cs = cubic_char_sum(a, b, p, *chi);
    } else {
        auto tab = quadratic_character(p);
        cs = cubic_char_sum(a, b, p, tab);
    }
    const Residue cs2 = reduce(cs, p);
    out.char_sum = sign(s1, mul_mod(cs2, cs2, p));

    const Residue m16 = sub_mod(mr, 16 % p, p);
    const int s2 = jacobi(static_cast<i64>(mul_mod(mr, m16, p)), static_cast<i64>(p));
    const Residue z = mul_mod(mr, inv_mod(mul_mod(mul_mod(m16, m16, p), m16, p), pp), p);
    out.sextic_short = sign(s2, family_sum(Family::Six3k, z, p / 6, pp));
    out.sextic_full = sign(s2, family_sum(Family::Six3k, z, p - 1, pp));
    return out;
}

bool central3_identity_check(i64 m, u64 p) { return central3_identity_values(m, p).agree(); }

}  // namespace congru
