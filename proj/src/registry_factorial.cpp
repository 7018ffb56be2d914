#include "eval.hpp"

namespace congru {

namespace {

const char* kGroup = "factorial sum";

i64 md(i64 a, i64 m) { return ((a % m) + m) % m; }

Residue fsum(Eval& ev, Family f, i64 m, Upper u = Upper::PMinus1) {
    return ev.sum(factorial_spec(f, Fraction(1, m), u));
}

void require_unit(Eval& ev, i64 m) {
    if (m % ev.P == 0) ev.na("p divides " + std::to_string(m));
}

Residue std_rhs(Eval& ev, i64 x) { return ev.r(4 * x * x - 2 * ev.P); }

Verdict rv1(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const Residue S = fsum(ev, Family::Sextic, 1728);
    return ev.select({
        {ev.pmod(4, {1}), "p=x^2+y^2, 2∤x",
         [&] {
             auto [x, y] = ev.sq2();
             return ev.holds(S, ev.sgnmul(ev.jac(ev.P, 3), std_rhs(ev, x)), "");
         }},
        {ev.pmod(4, {3}), "p≡3 mod 4", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict rv2(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const Residue S = fsum(ev, Family::Quartic, 256);
    return ev.select({
        {ev.pmod(8, {1, 3}), "p≡1,3 mod 8", [&] { return ev.holds(S, std_rhs(ev, ev.rep(ev.P, 1, 2).x), ""); }},
        {ev.pmod(8, {5, 7}), "p≡5,7 mod 8", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict rv3(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const Residue S = fsum(ev, Family::Cube2k3k, 108);
    return ev.select({
        {ev.pmod(3, {1}), "p≡1 mod 3", [&] { return ev.holds(S, std_rhs(ev, ev.rep(ev.P, 1, 3).x), ""); }},
        {ev.pmod(3, {2}), "p≡2 mod 3", [&] { return ev.holds(S, 0, ""); }},
    });
}

struct Main41 {
    const char* id;
    const char* hyp;
    const char* zhyp;
    Family fam;
    i64 m;
    std::function<bool(i64)> cls;
    i64 D;
    std::function<int(Eval&)> sym;
};

const std::vector<Main41>& table41() {
    static const std::vector<Main41> t = {
        {"4.1", "p≡1 (mod 4), p=x^2+y^2, 2∤x", "p≡3 (mod 4)", Family::Quartic, 648,
         [](i64 p) { return p % 4 == 1; }, 1, [](Eval&) { return 1; }},
        {"4.2", "p≡1 (mod 3), p=x^2+3y^2", "p≡5 (mod 6)", Family::Quartic, -144, [](i64 p) { return p % 3 == 1; }, 3,
         [](Eval&) { return 1; }},
        {"4.3", "p≡1,2,4 (mod 7), p=x^2+7y^2", "p≡3,5,6 (mod 7)", Family::Quartic, -3969,
         [](i64 p) { return p % 7 == 1 || p % 7 == 2 || p % 7 == 4; }, 7, [](Eval&) { return 1; }},
        {"4.4", "p≡1 (mod 4), p=x^2+y^2, 2∤x", "p≡3 (mod 4)", Family::Sextic, 66 * 66 * 66,
         [](i64 p) { return p % 4 == 1; }, 1, [](Eval& ev) { return ev.jac(ev.P, 33); }},
        {"4.5", "p≡1,3 (mod 8), p=x^2+2y^2", "p≡5,7 (mod 8)", Family::Sextic, 20 * 20 * 20,
         [](i64 p) { return p % 8 == 1 || p % 8 == 3; }, 2, [](Eval& ev) { return ev.jac(-5); }},
        {"4.6", "p≡1 (mod 3), p=x^2+3y^2", "p≡5 (mod 6)", Family::Sextic, 54000, [](i64 p) { return p % 3 == 1; }, 3,
         [](Eval& ev) { return ev.jac(ev.P, 5); }},
        {"4.8", "p≡1,2,4 (mod 7), p=x^2+7y^2", "p≡3,5,6 (mod 7)", Family::Sextic, -15 * 15 * 15,
         [](i64 p) { return p % 7 == 1 || p % 7 == 2 || p % 7 == 4; }, 7, [](Eval& ev) { return ev.jac(ev.P, 15); }},
        {"4.9", "p≡1,2,4 (mod 7), p=x^2+7y^2", "p≡3,5,6 (mod 7)", Family::Sextic, 255 * 255 * 255,
         [](i64 p) { return p % 7 == 1 || p % 7 == 2 || p % 7 == 4; }, 7, [](Eval& ev) { return ev.jac(ev.P, 255); }},
    };
    return t;
}

Verdict c41(Eval& ev, const Main41& t, bool zero) {
    require_unit(ev, t.m);
    if (zero) {
        if (t.cls(ev.P) || (t.D == 7 && ev.P == 7)) ev.na(std::string("outside ") + t.zhyp);
        const Residue S = fsum(ev, t.fam, t.m);
        Verdict v = ev.holds(S, 0, t.zhyp);
        if (t.m == 54000) {
            const Residue alt = ev.sum(factorial_spec(t.fam, Fraction(1, 54000LL * 54000 * 54000)));
            v.diagnostics += (v.diagnostics.empty() ? "" : "; ") + std::string("base 54000^(3k) variant: ") +
                             show(alt, ev.pp.m) + (alt == 0 ? " (also vanishes)" : " (does not vanish)");
        }
        return v;
    }
    if (!t.cls(ev.P)) ev.na(std::string("outside ") + t.hyp);
    const Residue S = fsum(ev, t.fam, t.m);
    i64 x;
    if (t.D == 1)
        x = ev.sq2().first;
    else
        x = ev.rep(ev.P, 1, t.D).x;
    return ev.holds(S, ev.sgnmul(t.sym(ev), std_rhs(ev, x)), "");
}

Verdict c4_7(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = fsum(ev, Family::Sextic, -12288000);
    return ev.select({
        {ev.pmod(3, {1}), "p≡1 mod 3, 4p=L^2+27M^2",
         [&] {
             const i64 L = ev.rep(4 * ev.P, 1, 27).x;
             return ev.holds(S, ev.sgnmul(ev.jac(10), ev.r(L * L - 2 * ev.P)), "");
         }},
        {ev.pmod(3, {2}), "p≡2 mod 3", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_10(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const Residue S = fsum(ev, Family::Cube2k3k, 1458);
    return ev.select({
        {ev.pmod(3, {1}), "p≡1 mod 3", [&] { return ev.holds(S, std_rhs(ev, ev.rep(ev.P, 1, 3).x), ""); }},
        {ev.pmod(3, {2}), "p≡2 mod 3", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_11(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = fsum(ev, Family::Cube2k3k, 15 * 15 * 15);
    return ev.select({
        {ev.pmod(15, {1, 4}), "p≡1,4 mod 15", [&] { return ev.holds(S, std_rhs(ev, ev.rep(ev.P, 1, 15).x), ""); }},
        {ev.pmod(15, {2, 8}), "p≡2,8 mod 15",
         [&] {
             const i64 x = ev.rep(ev.P, 3, 5).x;
             return ev.holds(S, ev.r(2 * ev.P - 12 * x * x), "");
         }},
        {ev.pmod(15, {7, 11, 13, 14}), "p≡7,11,13,14 mod 15", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_12(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    require_unit(ev, 8640);
    const Residue S = fsum(ev, Family::Cube2k3k, -8640);
    if (ev.pmod(3, {2})) return ev.holds(S, 0, "p≡2 mod 3");
    auto q = ev.rep(ev.P, 1, 3);
    const i64 x = q.x, y = q.y;
    const Residue t = pow_mod(10, (ev.p - 1) / 3, ev.p);
    const bool five = (x * y) % 5 == 0;
    if ((t == 1) != five) ev.anomaly("10^((p-1)/3)≡1 mod p disagrees with 5|xy");
    const PrimePower p1 = ev.pp.with_exp(1);
    const Residue xy = frac_mod(x, y, p1), h = inv_mod(2, p1);
    const Residue tm = mul_mod(sub_mod(neg_mod(1, ev.p), xy, ev.p), h, ev.p);
    const Residue tp = mul_mod(add_mod(neg_mod(1, ev.p), xy, ev.p), h, ev.p);
    ev.note("10^((p-1)/3) mod p = ", t);
    return ev.select({
        {t == 1, "10^((p-1)/3)≡1 mod p", [&] { return ev.holds(S, std_rhs(ev, x), ""); }},
        {t != 1 && t == tm, "10^((p-1)/3)≡(-1-x/y)/2 mod p",
         [&] { return ev.holds(S, ev.r(ev.P - 2 * x * x + 6 * x * y), ""); }},
        {t != 1 && t == tp, "10^((p-1)/3)≡(-1+x/y)/2 mod p",
         [&] { return ev.holds(S, ev.r(ev.P - 2 * x * x - 6 * x * y), ""); }},
    });
}

Verdict c4_13(Eval& ev) {
    if (!ev.pmod(12, {1})) ev.na("p is not 1 mod 12");
    i64 a = ev.rep(ev.P, 1, 4).x, A = ev.rep(ev.P, 1, 3).x;
    if (md(a, 4) != 1) a = -a;
    if (md(A, 4) != 1) A = -A;
    const Residue S = ev.sum(factorial_spec(Family::Binom6k3kSq, Fraction(1, -4096), Upper::Sixth));
    Residue inner = ev.r(2 * a + 4 * A);
    inner = ev.sub(inner, ev.frac(ev.P, 2 * a));
    inner = ev.sub(inner, ev.frac(ev.P, A));
    const Residue rhs = ev.sgnmul(ev.sgn(ev.P - 1, 4), ev.mul(ev.frac(1, 3), inner));
    return ev.holds(S, rhs, "");
}

struct W424 {
    const char* id;
    i64 a, b, m, coef, sym_top;
    i64 excl;
};

const W424 kW424[] = {
    {"4.24a", 63, 8, -15 * 15 * 15, 8, -15, 0},
    {"4.24b", 133, 8, 255 * 255 * 255, 8, -255, 17},
    {"4.24c", 28, 3, 20 * 20 * 20, 3, -5, 0},
    {"4.24d", 63, 5, 66 * 66 * 66, 5, -33, 11},
    {"4.24e", 11, 1, 54000, 1, -15, 0},
    {"4.24f", 506, 31, -12288000, 31, -30, 0},
};

Verdict c4_24(Eval& ev, const W424& w) {
    if (ev.P <= 5) ev.na("p <= 5");
    if (ev.P == w.excl) ev.na("excluded prime");
    require_unit(ev, w.m);
    const Residue S = ev.sum(weighted(factorial_spec(Family::Six3k, Fraction(1, w.m)), w.a, w.b));
    return ev.holds(S, ev.sgnmul(ev.jac(w.sym_top), ev.r(w.coef * ev.P)), "");
}

Verdict c4_46(Eval& ev, int part) {
    if (ev.P <= 3) ev.na("p <= 3");
    auto T = [&](Fraction x) { return ev.sum(factorial_spec(Family::Central3, x, Upper::Half)); };
    auto S = [&](i64 m) {
        require_unit(ev, m);
        return fsum(ev, Family::Sextic, m);
    };
    switch (part) {
        case 1:
            if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
            return ev.chain({{"sum binom(2k,k)^3/64^k", T(Fraction(1, 64))},
                             {"(3/p) S(12^3)", ev.sgnmul(ev.jac(3), S(12 * 12 * 12))},
                             {"(33/p) S(66^3)", ev.sgnmul(ev.jac(33), S(66 * 66 * 66))}},
                            "");
        case 2:
            if (!ev.pmod(7, {1, 2, 4})) ev.na("p is not 1, 2, 4 mod 7");
            return ev.chain({{"sum binom(2k,k)^3", T(Fraction(1))},
                             {"(-15/p) S(-15^3)", ev.sgnmul(ev.jac(-15), S(-15 * 15 * 15))},
                             {"(-255/p) S(255^3)", ev.sgnmul(ev.jac(-255), S(255 * 255 * 255))}},
                            "");
        case 3:
            if (!ev.pmod(8, {1, 3})) ev.na("p is not 1, 3 mod 8");
            return ev.chain({{"sum binom(2k,k)^3/(-64)^k", T(Fraction(1, -64))},
                             {"(5/p) S(20^3)", ev.sgnmul(ev.jac(5), S(20 * 20 * 20))}},
                            "");
        default:
            if (!ev.pmod(3, {1})) ev.na("p is not 1 mod 3");
            return ev.chain({{"sum binom(2k,k)^3/256^k", T(Fraction(1, 256))},
                             {"(-5/p) S(54000)", ev.sgnmul(ev.jac(-5), S(54000))}},
                            "");
    }
}

Verdict ded(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const Central3Values v = central3_identity_values(ev.param, ev.p, &ev.ctx.chi);
    return ev.chain({{"half sum", v.half_sum},
                     {"Legendre square", v.legendre},
                     {"character sum square", v.char_sum},
                     {"sextic sum to [p/6]", v.sextic_short},
                     {"sextic sum to p-1", v.sextic_full}},
                    "");
}

}  // namespace

void add_factorial_sums(std::vector<Statement>& out) {
    auto add = [&](StatementInfo i, std::function<Verdict(Eval&)> f) { out.push_back({std::move(i), std::move(f)}); };
    add(info("RV1", "p>3", 2, kGroup, "sum (6k)!/(1728^k (3k)! k!^3) mod p^2", ParamKind::None, true), rv1);
    add(info("RV2", "p>3", 2, kGroup, "sum (4k)!/(256^k k!^4) mod p^2", ParamKind::None, true), rv2);
    add(info("RV3", "p>3", 2, kGroup, "sum binom(2k,k)^2 binom(3k,k)/108^k mod p^2", ParamKind::None, true), rv3);
    for (const auto& t : table41()) {
        const std::string fam = t.fam == Family::Quartic ? "(4k)!/(m^k k!^4)" : "(6k)!/(m^k (3k)! k!^3)";
        const std::string form = "sum " + fam + ", m=" + std::to_string(t.m) + ", mod p^2";
        add(info(t.id, t.hyp, 2, kGroup, form), [&t](Eval& ev) { return c41(ev, t, false); });
        add(info(std::string(t.id) + "z", t.zhyp, 2, kGroup, form + " (vanishing class)", ParamKind::None, true),
            [&t](Eval& ev) { return c41(ev, t, true); });
    }
    add(info("4.7", "p>5", 2, kGroup, "sum (6k)!/((-12288000)^k (3k)! k!^3) mod p^2"), c4_7);
    add(info("4.10", "p>3", 2, kGroup, "sum binom(2k,k)^2 binom(3k,k)/1458^k mod p^2"), c4_10);
    add(info("4.11", "p>5", 2, kGroup, "sum binom(2k,k)^2 binom(3k,k)/15^(3k) mod p^2"), c4_11);
    add(info("4.12", "p>3", 2, kGroup, "sum binom(2k,k)^2 binom(3k,k)/(-8640)^k mod p^2"), c4_12);
    add(info("4.13", "p≡1 (mod 12), p=a^2+4b^2=A^2+3B^2", 2, kGroup,
             "sum_{k<=(p-1)/6} binom(6k,3k)^2/(-16)^(3k) mod p^2"),
        c4_13);
    for (const auto& w : kW424)
        add(info(w.id, "p>5", 2, kGroup,
                 "sum (" + std::to_string(w.a) + "k+" + std::to_string(w.b) + ") binom(2k,k)binom(3k,k)binom(6k,3k)/(" +
                     std::to_string(w.m) + ")^k mod p^2"),
            [&w](Eval& ev) { return c4_24(ev, w); });
    const char* h46[] = {"p>3, p≡1 (mod 4)", "p>3, p≡1,2,4 (mod 7)", "p>3, p≡1,3 (mod 8)", "p>3, p≡1 (mod 3)"};
    const char* id46[] = {"4.46i", "4.46ii", "4.46iii", "4.46iv"};
    for (int i = 0; i < 4; ++i)
        add(info(id46[i], h46[i], 3, kGroup, "sum_{k<=(p-1)/2} binom(2k,k)^3 x^k against sextic sums, mod p^3"),
            [i](Eval& ev) { return c4_46(ev, i + 1); });
    Statement d{info("DED", "p>3, p∤m(m-16)(m-64)", 1, kGroup,
                     "five equal expressions for sum binom(2k,k)^3/m^k mod p", ParamKind::M, true),
                ded};
    d.grid_max = 20;
    out.push_back(std::move(d));
}

}  // namespace congru
