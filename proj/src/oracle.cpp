#include "congru/oracle.hpp"

#include <map>
#include <sstream>

#include "congru/lucas.hpp"
#include "congru/registry.hpp"

namespace congru::oracle {

namespace {

mpz_class mz(i64 v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

mpz_class mz(u64 v) {
    mpz_class z;
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
    return z;
}

Residue to_res(const mpz_class& z, u64 m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mz(m).get_mpz_t());
    return static_cast<Residue>(mpz_get_ui(r.get_mpz_t()));
}

mpq_class frac(const Fraction& f) {
    mpq_class q(mz(f.num), mz(f.den));
    q.canonicalize();
    return q;
}

std::vector<u64> small_primes(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (n > 2 && is_prime(n)) out.push_back(n);
    return out;
}

template <class... T>
std::string cat(const T&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string spec_key(const SumSpec& s) {
    return cat(family_name(s.family), " x=", s.x.num, "/", s.x.den, " r=", s.r1.num, "/", s.r1.den, ",", s.r2.num,
               "/", s.r2.den, " w=", s.wa, "k+", s.wb, " u=", static_cast<int>(s.upper));
}

}  // namespace

void Report::expect(bool good, const std::string& what) {
    ++checks;
    if (!good && mismatches.size() < 50) mismatches.push_back(what);
}

mpz_class binom(u64 n, u64 k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

mpq_class binom(const mpq_class& r, u64 k) {
    mpq_class acc = 1;
    for (u64 j = 0; j < k; ++j) {
        acc *= r - mpq_class(mz(j));
        acc /= mpq_class(mz(j + 1));
    }
    return acc;
}

mpz_class franel(u64 n) {
    mpz_class s = 0;
    for (u64 k = 0; k <= n; ++k) {
        mpz_class b = binom(n, k);
        s += b * b * b;
    }
    return s;
}

mpq_class term(const SumSpec& s, u64 k) {
    switch (s.family) {
        case Family::Quartic: {
            mpz_class c = binom(2 * k, k);
            return mpq_class(binom(4 * k, 2 * k) * c * c);
        }
        case Family::Sextic:
        case Family::Six3k: return mpq_class(binom(2 * k, k) * binom(3 * k, k) * binom(6 * k, 3 * k));
        case Family::Cube2k3k: {
            mpz_class c = binom(2 * k, k);
            return mpq_class(c * c * binom(3 * k, k));
        }
        case Family::Central1: return mpq_class(binom(2 * k, k));
        case Family::Central2: {
            mpz_class c = binom(2 * k, k);
            return mpq_class(c * c);
        }
        case Family::Central3: {
            mpz_class c = binom(2 * k, k);
            return mpq_class(c * c * c);
        }
        case Family::Binom6k3kSq: {
            mpz_class c = binom(6 * k, 3 * k);
            return mpq_class(c * c);
        }
        case Family::Zp: return mpq_class(binom(2 * k, k) * franel(k));
        case Family::GenBinom: return binom(frac(s.r1), k) * binom(frac(s.r2), k);
    }
    return 0;
}

mpq_class sum(const SumSpec& s, u64 p) {
    const u64 K = upper_index(s.upper, p);
    const mpq_class x = frac(s.x);
    mpq_class xk = 1, total = 0;
    for (u64 k = 0; k <= K; ++k) {
        total += mpq_class(mz(s.wa) * mz(k) + mz(s.wb)) * term(s, k) * xk;
        xk *= x;
    }
    return total;
}

std::optional<Residue> reduce(const mpq_class& q, const PrimePower& pp) {
    const mpz_class m = mz(pp.m);
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t())) return std::nullopt;
    return to_res(q.get_num() * inv, pp.m);
}

std::optional<Residue> sum_mod(const SumSpec& s, const PrimePower& pp) { return reduce(sum(s, pp.p), pp); }

Residue legendre_poly(u64 n, Residue t, u64 p) {
    // P_n(t) = sum_k binom(n,k) binom(n+k,k) ((t-1)/2)^k
    const mpz_class P = mz(p);
    mpz_class half;
    mpz_invert(half.get_mpz_t(), mpz_class(2).get_mpz_t(), P.get_mpz_t());
    const mpz_class u = (mz(t) - 1) * half;
    mpz_class uk = 1, s = 0;
    for (u64 k = 0; k <= n; ++k) {
        s += binom(n, k) * binom(n + k, k) * uk;
        uk = uk * u % P;
    }
    return to_res(s, p);
}

// ---------------------------------------------------------------- suites

Report franel_suite(u64 n_max) {
    Report r{"franel"};
    for (u64 n = 1; n < n_max; ++n) {
        const mpz_class lhs = mz(n + 1) * mz(n + 1) * franel(n + 1);
        const mpz_class rhs = mz(7 * n * n + 7 * n + 2) * franel(n) + mz(8 * n * n) * franel(n - 1);
        r.expect(lhs == rhs, cat("recurrence at n=", n));
    }
    for (u64 p : {5, 7, 13, 97})
        for (int e = 1; e <= 3; ++e) {
            const PrimePower pp(p, e);
            const auto f = franel_sequence(pp);
            for (u64 n = 0; n < f.size() && n <= n_max; ++n)
                r.expect(f[n] == to_res(franel(n), pp.m), cat("f_", n, " mod ", p, "^", e));
        }
    return r;
}

Report lucas_suite(u64 n_max) {
    Report r{"lucas"};
    const std::vector<std::pair<i64, i64>> params = {{1, -1}, {2, -1}, {3, 2}, {4, -3}, {5, 7}, {-3, 5}, {16, 1}, {6, 1}};
    const std::vector<u64> moduli = {7, 13, 97, 97 * 97 * 97, 1009ULL * 1009, 999999937ULL * 999999937ULL};
    for (auto [b, c] : params) {
        mpz_class u0 = 0, u1 = 1, v0 = 2, v1 = mz(b);
        std::vector<mpz_class> U{u0}, V{v0};
        for (u64 n = 1; n <= n_max; ++n) {
            U.push_back(u1);
            V.push_back(v1);
            mpz_class u2 = mz(b) * u1 - mz(c) * u0, v2 = mz(b) * v1 - mz(c) * v0;
            u0 = u1, u1 = u2, v0 = v1, v1 = v2;
        }
        for (u64 m : moduli) {
            const auto st = lucas_stream(b, c, n_max, m);
            for (u64 n = 0; n <= n_max; ++n) {
                const Residue eu = to_res(U[n], m), ev = to_res(V[n], m);
                const auto d = lucas_uv(b, c, n, m);
                r.expect(d.u == eu && d.v == ev, cat("doubling U,V_", n, "(", b, ",", c, ") mod ", m));
                r.expect(st[n].u == eu && st[n].v == ev, cat("stream U,V_", n, "(", b, ",", c, ") mod ", m));
            }
        }
    }
    // Lucas-weighted central sums
    for (u64 p : small_primes(5, 37)) {
        const PrimePower pp(p, 2);
        const u64 K = (p - 1) / 2;
        for (i64 b : {16, 3, -5}) {
            auto st = lucas_stream(b, 1, K, pp);
            std::vector<Residue> wu(K + 1);
            mpz_class u0 = 0, u1 = 1, exact = 0;
            for (u64 k = 0; k <= K; ++k) {
                wu[k] = st[k].u;
                mpz_class c = binom(2 * k, k);
                exact += c * c * u0;
                mpz_class u2 = mz(b) * u1 - u0;
                u0 = u1, u1 = u2;
            }
            r.expect(family_sum(Family::Central2, 1, K, pp, &wu) == to_res(exact, pp.m),
                     cat("sum binom(2k,k)^2 U_k(", b, ",1) mod ", p, "^2"));
        }
    }
    return r;
}

Report factorial_suite(u64 n_max) {
    Report r{"factorial"};
    const auto primes = small_primes(3, 97);
    mpz_class f;
    for (u64 n = 0; n <= n_max; ++n) {
        mpz_fac_ui(f.get_mpz_t(), n);
        for (u64 p : primes) {
            mpz_class unit;
            const u64 nu = mpz_remove(unit.get_mpz_t(), f.get_mpz_t(), mz(p).get_mpz_t());
            r.expect(factorial_nu(n, p) == nu, cat("nu_", p, "(", n, "!)"));
            for (int e = 1; e <= 3; ++e) {
                const PrimePower pp(p, e);
                r.expect(factorial_unit(n, pp) == to_res(unit, pp.m), cat("unit part of ", n, "! mod ", p, "^", e));
            }
        }
    }
    // quotients with cancellation: (4k)!/k!^4, (6k)!/((3k)! k!^3), binom(2k,k)
    for (u64 k = 0; 6 * k <= n_max; ++k) {
        const std::vector<std::pair<std::vector<u64>, std::vector<u64>>> qs = {
            {{4 * k}, {k, k, k, k}}, {{6 * k}, {3 * k, k, k, k}}, {{2 * k}, {k, k}}};
        for (const auto& [num, den] : qs) {
            mpz_class exact = 1, t;
            for (u64 a : num) mpz_fac_ui(t.get_mpz_t(), a), exact *= t;
            for (u64 a : den) mpz_fac_ui(t.get_mpz_t(), a), exact /= t;
            for (u64 p : {3, 5, 7, 11, 97}) {
                mpz_class unit;
                const int nu = static_cast<int>(mpz_remove(unit.get_mpz_t(), exact.get_mpz_t(), mz(p).get_mpz_t()));
                for (int e = 1; e <= 3; ++e) {
                    const PrimePower pp(p, e);
                    const auto q = factorial_quotient(num, den, pp);
                    bool good;
                    if (nu >= e) {
                        good = q.is_zero(pp);
                    } else {
                        const u64 rest = PrimePower(p, e - nu).m;
                        good = q.nu == nu && q.unit % rest == to_res(unit, rest);
                    }
                    r.expect(good, cat("quotient (", num[0], ")!/... at k=", k, " mod ", p, "^", e));
                }
            }
        }
    }
    return r;
}

Report sums_suite(u64 p_max) {
    Report r{"sums"};
    std::map<std::string, bool> seen;
    const SweepConfig cfg;
    for (u64 p : small_primes(3, p_max)) {
        for (int e = 1; e <= 3; ++e) {
            const PrimeContext ctx = PrimeContext::build(p, 3);
            for (const auto& st : catalog()) {
                for (i64 prm : param_grid(st, cfg)) {
                    std::optional<i64> pv;
                    if (st.info.param != ParamKind::None) pv = prm;
                    const Verdict v = check({st.info.id, p, pv}, ctx, e);
                    for (const auto& s : v.sums) {
                        const std::string key = cat(spec_key(s.spec), " mod ", s.modulus.p, "^", s.modulus.e);
                        if (seen.count(key)) continue;
                        seen[key] = true;
                        const auto exact = sum_mod(s.spec, s.modulus);
                        r.expect(exact && *exact == s.value, cat(key, " (", st.info.id, ")"));
                    }
                }
            }
        }
    }
    // every family directly, including ones only used through family_sum
    for (u64 p : small_primes(5, p_max)) {
        for (int e = 1; e <= 3; ++e) {
            const PrimePower pp(p, e);
            for (Family f : {Family::Quartic, Family::Sextic, Family::Six3k, Family::Cube2k3k, Family::Central1,
                             Family::Central2, Family::Central3, Family::Binom6k3kSq, Family::Zp}) {
                for (i64 m : {1, -4, 7, 64, -4096}) {
                    if (m % static_cast<i64>(p) == 0) continue;
                    const SumSpec s = weighted(factorial_spec(f, Fraction(1, m)), 3, 1);
                    const auto exact = sum_mod(s, pp);
                    r.expect(exact && *exact == evaluate(s, pp), cat(spec_key(s), " mod ", p, "^", e));
                }
            }
        }
    }
    return r;
}

Report identity_suite(u64 p_max) {
    Report r{"identity"};
    for (u64 p : small_primes(5, p_max)) {
        const PrimePower pp(p, 1);
        for (i64 m = 1; m <= 20; ++m) {
            const Residue mr = static_cast<Residue>(m) % p;
            if (mr == 0 || mr == 16 % p || mr == 64 % p) continue;
            const auto lib = central3_identity_values(m, p);

            const Residue half = *sum_mod(factorial_spec(Family::Central3, Fraction(1, m), Upper::Half), pp);
            const mpz_class P = mz(p);
            auto inv = [&](const mpz_class& a) {
                mpz_class i;
                mpz_invert(i.get_mpz_t(), a.get_mpz_t(), P.get_mpz_t());
                return i;
            };
            const mpz_class t = (mz(m) + 64) * inv(mz(m) - 64) % P;
            const int s1 = jacobi(m * (m - 64), static_cast<i64>(p));
            const mpz_class Pn = legendre_poly(p / 4, to_res(t, p), p);
            const Residue leg = to_res(s1 * Pn * Pn, p);
            // cubic character sum over x^3 + a x + b
            const mpz_class a = -3 * (3 * t + 5) * inv(2), b = 9 * t + 7;
            i64 cs = 0;
            for (u64 x = 0; x < p; ++x) {
                const mpz_class X = mz(x);
                cs += jacobi(static_cast<i64>(to_res(X * X * X + a * X + b, p)), static_cast<i64>(p));
            }
            const Residue chs = to_res(mz(s1 * cs * cs), p);
            const int s2 = jacobi(m * (m - 16), static_cast<i64>(p));
            mpq_class z(mz(m), mz((m - 16) * (m - 16) * (m - 16)));
            z.canonicalize();
            auto sextic = [&](u64 K) {
                mpq_class s = 0, zk = 1;
                for (u64 k = 0; k <= K; ++k, zk *= z) s += term(factorial_spec(Family::Six3k, 1), k) * zk;
                return to_res(mz(static_cast<i64>(s2)) * mz(*reduce(s, pp)), p);
            };
            const Residue sh = sextic(p / 6), sf = sextic(p - 1);
            const std::string at = cat(" at m=", m, ", p=", p);
            r.expect(half == leg && leg == chs && chs == sh && sh == sf, "exact values disagree" + at);
            r.expect(lib.half_sum == half && lib.legendre == leg && lib.char_sum == chs && lib.sextic_short == sh &&
                         lib.sextic_full == sf,
                     "library values differ from exact" + at);
        }
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"franel", "lucas", "factorial", "sums", "identity"};
    return n;
}

Report run_suite(const std::string& name, std::optional<u64> max) {
    if (name == "franel") return franel_suite(max.value_or(60));
    if (name == "lucas") return lucas_suite(max.value_or(1000));
    if (name == "factorial") return factorial_suite(max.value_or(2000));
    if (name == "sums") return sums_suite(max.value_or(37));
    if (name == "identity") return identity_suite(max.value_or(200));
    throw std::invalid_argument("unknown oracle suite: " + name);
}

}  // namespace congru::oracle
