#include "eval.hpp"

namespace congru {

namespace {

const char* kGroup = "generalized binomial";

i64 md(i64 a, i64 m) { return ((a % m) + m) % m; }

Residue G(Eval& ev, Fraction r1, Fraction r2, Fraction x) { return ev.sum(genbinom_spec(r1, r2, x)); }

// sum_{k<=(p-5)/6} binom((p-2)/3,k) binom((p-5)/6,k) x^k mod p
Residue G_short(Eval& ev, Fraction x) {
    return ev.sum_at(genbinom_spec(Fraction(ev.P - 2, 3), Fraction(ev.P - 5, 6), x, Upper::SixthMinus5), 1);
}

Residue fr(Eval& ev, Fraction f) { return ev.frac(f.num, f.den); }

// (a/p) for a residue a
int leg(Eval& ev, Residue a) { return jacobi(static_cast<i64>(a % ev.p), ev.P); }

// Factor c^{(1-(p/3))/2}: c when (p/3) = -1, else 1.
Residue when_nonres3(Eval& ev, Fraction c) { return ev.jac(ev.P, 3) == -1 ? fr(ev, c) : ev.r(1); }

struct Pair36 {
    Residue s1, s2;
};

Pair36 thirds(Eval& ev, Fraction x) {
    return {G(ev, Fraction(-1, 3), Fraction(-1, 6), x), G(ev, Fraction(-2, 3), Fraction(-5, 6), x)};
}

Verdict three(Eval& ev, const Pair36& s, Residue fac, Residue rhs, const std::string& fac_name, int e_branch = 0) {
    return ev.chain({{"S(-1/3,-1/6)", s.s1}, {fac_name + " S(-2/3,-5/6)", ev.mul(fac, s.s2)}, {"rhs", rhs}}, "",
                    e_branch);
}

Verdict c4_25(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Fraction x0(-4);
    const auto s = thirds(ev, x0);
    const Residue fac = ev.sgnmul(ev.jac(5), when_nonres3(ev, Fraction(5)));
    auto r1 = ev.rep_opt(ev.P, 1, 15);
    auto r2 = ev.rep_opt(ev.P, 5, 3);
    const char* fn = "(5/p)5^((1-(p/3))/2)";
    return ev.select({
        {r1.has_value(), "p=x^2+15y^2",
         [&] {
             const i64 x = r1->x;
             return three(ev, s, fac, ev.sgnmul(ev.jac(x, 3), ev.t_minus(2 * x)), fn);
         }},
        {r2.has_value(), "p=5x^2+3y^2",
         [&] {
             const i64 x = r2->x;
             return three(ev, s, fac, ev.sgnmul(-ev.jac(x, 3), ev.at_minus(10, x, 2)), fn);
         }},
        {ev.pmod(30, {7, 11, 13, 29}), "p≡7,11,13,29 mod 30", [&] { return three(ev, s, fac, 0, fn, 1); }},
    });
}

Verdict c4_25cor(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    auto r = ev.rep_opt(ev.P, 5, 3);
    if (!r) ev.na("p is not of the form 5x^2+3y^2");
    const i64 x = r->x;
    return ev.holds(ev.r(2 * x * ev.jac(x, 3)), G_short(ev, Fraction(-4)), "", 1);
}

Verdict c4_26(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const auto s = thirds(ev, Fraction(1, 2));
    const Residue fac = ev.sgnmul(ev.jac(2), when_nonres3(ev, Fraction(1, 2)));
    const char* fn = "(2/p)2^(((p/3)-1)/2)";
    if (ev.pmod(24, {17, 23})) ev.na("p≡17,23 mod 24 is not covered");
    return ev.select({
        {ev.pmod(24, {1, 7}), "p=x^2+6y^2≡1,7 mod 24",
         [&] {
             const i64 x = ev.rep(ev.P, 1, 6).x;
             return three(ev, s, fac, ev.sgnmul(ev.jac(x, 3), ev.t_minus(2 * x)), fn);
         }},
        {ev.pmod(24, {5, 11}), "p=2x^2+3y^2≡5,11 mod 24",
         [&] {
             const i64 x = ev.rep(ev.P, 2, 3).x;
             return three(ev, s, fac, ev.sgnmul(ev.jac(x, 3), ev.t_minus(2 * x, 2)), fn);
         }},
        {ev.pmod(24, {13, 19}), "p≡13,19 mod 24", [&] { return three(ev, s, fac, 0, fn, 1); }},
    });
}

Verdict c4_26cor(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    auto r = ev.rep_opt(ev.P, 2, 3);
    if (!r) ev.na("p is not of the form 2x^2+3y^2");
    const i64 x = r->x;
    return ev.holds(ev.r(x * ev.jac(x, 3)), ev.mul(ev.frac(-1, 4), G_short(ev, Fraction(1, 2))), "", 1);
}

struct Gen4p {
    Fraction x0;
    i64 D;
    Fraction K2, rat;
};

const Gen4p kGen[] = {
    {Fraction(-1, 16), 17, Fraction(17, 16), Fraction(1, 4)},
    {Fraction(-1, 1024), 41, Fraction(1025, 1024), Fraction(5, 32)},
    {Fraction(-1, 250000), 89, Fraction(250001, 250000), Fraction(53, 500)},
};

Verdict c4_27to29(Eval& ev, const Gen4p& g) {
    if (ev.P <= 3) ev.na("p <= 3");
    if (ev.P == g.D) ev.na("p equals the form coefficient");
    const auto s = thirds(ev, g.x0);
    const Residue fac = ev.sgnmul(ev.jac(g.D), when_nonres3(ev, g.K2));
    const std::string fn = "(" + std::to_string(g.D) + "/p) K^((1-(p/3))/2)";
    auto r1 = ev.rep_opt(4 * ev.P, 1, 3 * g.D);
    auto r2 = ev.rep_opt(4 * ev.P, g.D, 3);
    const bool zero = ev.jac(ev.P, 3) == 1 && ev.jac(ev.P, g.D) == -1;
    if (!r1 && !r2 && !zero) ev.na("no representation and not in the vanishing class");
    return ev.select({
        {r1.has_value(), "4p=x^2+" + std::to_string(3 * g.D) + "y^2",
         [&] {
             const i64 x = r1->x;
             return three(ev, s, fac, ev.sgnmul(-ev.jac(x, 3), ev.t_minus(x)), fn);
         }},
        {r2.has_value(), "4p=" + std::to_string(g.D) + "x^2+3y^2",
         [&] {
             const i64 x = r2->x;
             const Residue v = ev.mul(fr(ev, g.rat), ev.sgnmul(ev.jac(x, 3), ev.at_minus(g.D, x, 1)));
             return three(ev, s, fac, v, fn);
         }},
        {zero, "(p/3)=-(p/" + std::to_string(g.D) + ")=1", [&] { return three(ev, s, fac, 0, fn, 1); }},
    });
}

Verdict c4_27to29cor(Eval& ev, const Gen4p& g) {
    if (ev.P <= 3) ev.na("p <= 3");
    if (ev.P == g.D) ev.na("p equals the form coefficient");
    auto r = ev.rep_opt(4 * ev.P, g.D, 3);
    if (!r) ev.na("4p is not of the form Dx^2+3y^2");
    const i64 x = r->x;
    return ev.holds(ev.r(x * ev.jac(x, 3)), ev.neg(ev.mul(fr(ev, g.rat), G_short(ev, g.x0))), "", 1);
}

Verdict c4_30(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    if (ev.pmod(30, {11, 29})) ev.na("p≡11,29 mod 30 is not covered");
    const auto s = thirds(ev, Fraction(-1, 80));
    const Residue fac = ev.r(ev.jac(5));
    const char* fn = "(5/p)";
    return ev.select({
        {ev.pmod(30, {1, 19}), "p≡1,19 mod 30",
         [&] {
             i64 x = ev.rep(4 * ev.P, 1, 75).x;
             if (x % 3 == 0) ev.anomaly("3 divides x");
             if (md(x, 3) != 2) x = -x;
             return three(ev, s, fac, ev.t_minus(x), fn);
         }},
        {ev.pmod(30, {7, 13}), "p≡7,13 mod 30",
         [&] {
             i64 x = ev.rep(4 * ev.P, 25, 3).x;
             if (x % 3 == 0) ev.anomaly("3 divides x");
             if (md(x, 3) != 1) x = -x;
             return three(ev, s, fac, ev.t_minus(5 * x), fn);
         }},
        {ev.pmod(30, {17, 23}), "p≡17,23 mod 30", [&] { return three(ev, s, fac, 0, fn, 1); }},
    });
}

Verdict c4_31(Eval& ev, bool cor) {
    if (ev.P <= 11 || ev.jac(ev.P, 11) != 1) ev.na("needs p > 11 with (p/11) = 1");
    if (cor && !ev.pmod(3, {2})) ev.na("p is not 2 mod 3");
    auto r = ev.rep(4 * ev.P, 1, 11);
    const i64 x = r.x, y0 = r.y;
    const int x11 = ev.jac(x, 11);
    const PrimePower p1 = ev.pp.with_exp(1);
    if (cor) {
        const Residue S = G_short(ev, Fraction(27, 16));
        return ev.any_sign("y", [&](int sy) {
            const i64 y = sy * y0;
            const Residue xy = frac_mod(x, y, p1);
            const int l = leg(ev, add_mod(reduce(-11, ev.p), x11 == 1 ? xy : neg_mod(xy, ev.p), ev.p));
            return ev.holds(ev.r(y * l), ev.mul(ev.frac(1, 4), S), "", 1);
        });
    }
    const auto s = thirds(ev, Fraction(27, 16));
    const Residue fac = when_nonres3(ev, Fraction(-11, 16));
    const char* fn = "(-11/16)^((1-(p/3))/2)";
    return ev.any_sign("y", [&](int sy) {
        const i64 y = sy * y0;
        const Residue xy = frac_mod(x, y, p1);
        if (ev.pmod(3, {1})) {
            const int l = leg(ev, add_mod(reduce(-11, ev.p), xy, ev.p));
            Verdict v = three(ev, s, fac, ev.sgnmul(-l * x11, ev.t_minus(x)), fn);
            v.branch = "p≡1 mod 3";
            return v;
        }
        const int l = leg(ev, add_mod(reduce(-11, ev.p), x11 == 1 ? xy : neg_mod(xy, ev.p), ev.p));
        Verdict v = three(ev, s, fac, ev.neg(ev.mul(ev.frac(1, 4), ev.sgnmul(l, ev.at_minus(11, y, 1)))), fn);
        v.branch = "p≡2 mod 3";
        return v;
    });
}

i64 L_normalized(Eval& ev) {
    i64 L = ev.rep(4 * ev.P, 1, 27).x;
    if (md(L, 3) != 2) L = -L;
    return L;
}

Verdict c4_32(Eval& ev) {
    if (!ev.pmod(3, {1})) ev.na("p is not 1 mod 3");
    const i64 L = L_normalized(ev);
    const auto s = thirds(ev, Fraction(-9, 16));
    return ev.chain({{"S(-1/3,-1/6)", s.s1}, {"S(-2/3,-5/6)", s.s2}, {"L-p/L", ev.t_minus(L)}}, "");
}

Verdict c4_33(Eval& ev) {
    if (!ev.pmod(8, {1, 3})) ev.na("p is not 1, 3 mod 8");
    if (!ev.pmod(24, {1, 11, 17, 19})) ev.na("p lies in no stated branch");
    auto r = ev.rep(ev.P, 1, 2);
    const i64 c = md(r.x, 4) == 1 ? r.x : -r.x, d0 = r.y;
    const auto s = thirds(ev, Fraction(27, 2));
    const Residue fac = when_nonres3(ev, Fraction(-25, 2));
    const char* fn = "(-25/2)^((1-(p/3))/2)";
    const int s8 = ev.sgn(ev.P / 8);
    const PrimePower p1 = ev.pp.with_exp(1);
    return ev.any_sign("d", [&](int sd) {
        const i64 d = sd * d0;
        const Residue cd = frac_mod(c, d, p1);
        return ev.select({
            {ev.pmod(24, {1, 19}), "p≡1,19 mod 24",
             [&] {
                 const int l = leg(ev, sub_mod(reduce(-2, ev.p), cd, ev.p));
                 return three(ev, s, fac, ev.sgnmul(s8 * l, ev.t_minus(2 * c)), fn);
             }},
            {ev.pmod(24, {11, 17}), "p≡11,17 mod 24",
             [&] {
                 const int l = leg(ev, add_mod(2, cd, ev.p));
                 const Residue v = ev.sub(ev.r(10 * d), ev.frac(5 * ev.P, 4 * d));
                 return three(ev, s, fac, ev.sgnmul(s8 * l, v), fn);
             }},
        });
    });
}

Verdict c4_34(Eval& ev) {
    if (!ev.pmod(3, {1})) ev.na("p is not 1 mod 3");
    const i64 L = L_normalized(ev);
    return ev.holds(G(ev, Fraction(-1, 3), Fraction(-1, 3), Fraction(9)), ev.t_minus(L), "");
}

Verdict c4_35(Eval& ev, bool a) {
    if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
    auto [x0, y] = ev.sq2();
    const i64 x = md(x0, 4) == 1 ? x0 : -x0;
    if (a)
        return ev.holds(G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(-8)),
                        ev.sgnmul(ev.sgn(ev.P - 1, 4), ev.t_minus(2 * x)), "");
    const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(1, -8));
    return ev.select({
        {ev.pmod(8, {1}), "p≡1 mod 8", [&] { return ev.holds(S, ev.sgnmul(ev.sgn(y, 4), ev.t_minus(2 * x)), ""); }},
        {ev.pmod(8, {5}), "p≡5 mod 8",
         [&] { return ev.holds(S, ev.sgnmul(ev.sgn(y - 2, 4), ev.t_minus(2 * y)), ""); }},
    });
}

Verdict c4_36(Eval& ev, char sub) {
    if (!ev.pmod(3, {1})) ev.na("p is not 1 mod 3");
    auto r = ev.rep(ev.P, 1, 3);
    const i64 A = r.x, B = r.y;
    if (sub != 'c') {
        const Residue S = sub == 'a' ? G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(4))
                                     : G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(-8));
        return ev.select({
            {ev.pmod(12, {1}), "p≡1 mod 12",
             [&] { return ev.holds(S, ev.sgnmul(ev.sgn(ev.P - 1, 4) * ev.sgn(A - 1, 2), ev.t_minus(2 * A)), ""); }},
            {ev.pmod(12, {7}), "p≡7 mod 12",
             [&] { return ev.holds(S, ev.sgnmul(ev.sgn(ev.P + 1, 4) * ev.sgn(B - 1, 2), ev.at_minus(6, B, 2)), ""); }},
        });
    }
    const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(1, 4));
    return ev.select({
        {ev.pmod(12, {1}), "p≡1 mod 12",
         [&] { return ev.holds(S, ev.sgnmul(ev.sgn(A - 1, 2), ev.t_minus(2 * A)), ""); }},
        {ev.pmod(12, {7}), "p≡7 mod 12",
         [&] { return ev.holds(S, ev.sgnmul(ev.sgn(B - 1, 2), ev.at_minus(3, B, 4)), ""); }},
    });
}

Verdict c4_37(Eval& ev, bool a) {
    if (!ev.pmod(7, {1, 2, 4})) ev.na("p is not 1, 2, 4 mod 7");
    auto r = ev.rep(ev.P, 1, 7);
    const i64 x = r.x, y = r.y;
    if (a) {
        const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(64));
        const int s2 = ev.jac(2);
        return ev.select({
            {ev.pmod(4, {1}), "p≡1 mod 4",
             [&] { return ev.holds(S, ev.sgnmul(s2 * ev.sgn(x - 1, 2), ev.t_minus(2 * x)), ""); }},
            {ev.pmod(4, {3}), "p≡3 mod 4",
             [&] {
                 const Residue v = ev.sub(ev.r(42 * y), ev.frac(3 * ev.P, 2 * y));
                 return ev.holds(S, ev.sgnmul(s2 * ev.sgn(y - 1, 2), v), "");
             }},
        });
    }
    const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(1, 64));
    return ev.select({
        {ev.pmod(4, {1}), "p≡1 mod 4",
         [&] { return ev.holds(S, ev.sgnmul(ev.sgn(x - 1, 2), ev.t_minus(2 * x)), ""); }},
        {ev.pmod(4, {3}), "p≡3 mod 4",
         [&] {
             const Residue v = ev.mul(ev.frac(3, 4), ev.sgnmul(ev.sgn(y - 1, 2), ev.at_minus(7, y, 4)));
             return ev.holds(S, v, "");
         }},
    });
}

Verdict c4_38(Eval& ev) {
    const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 4), Fraction(-1));
    if (ev.pmod(8, {5, 7})) return ev.holds(S, 0, "p≡5,7 mod 8", 1);
    auto r = ev.rep(ev.P, 1, 2);
    const i64 x = r.x, y = r.y;
    return ev.select({
        {ev.pmod(8, {1}), "p=x^2+2y^2≡1 mod 8",
         [&] { return ev.holds(S, ev.sgnmul(ev.sgn(x + 1, 2), ev.t_minus(2 * x)), ""); }},
        {ev.pmod(8, {3}), "p=x^2+2y^2≡3 mod 8",
         [&] { return ev.holds(S, ev.sgnmul(ev.sgn(y - 1, 2), ev.at_minus(4, y, 2)), ""); }},
    });
}

Verdict c4_39(Eval& ev, int part) {
    if (part == 1) {
        if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
        auto [x, y0] = ev.sq2();
        const Residue S1 = G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(1, 4));
        const Residue S2 = ev.sgnmul(ev.jac(ev.P, 3), G(ev, Fraction(-1, 2), Fraction(-1, 6), Fraction(2)));
        auto ch = [&](Residue r, const char* b) {
            return ev.chain({{"S(-1/4,-1/2;1/4)", S1}, {"(p/3) S(-1/2,-1/6;2)", S2}, {"rhs", r}}, b);
        };
        if (ev.pmod(12, {1}))
            return ch(ev.sgnmul(ev.sgn(ev.P - 1, 4) * ev.sgn(x + 1, 2), ev.t_minus(2 * x)), "12|p-1");
        return ev.any_sign("y", [&](int sy) { return ch(ev.t_minus(2 * sy * y0), "12|p-5"); });
    }
    if (!ev.pmod(4, {3})) ev.na("p is not 3 mod 4");
    if (part == 2) return ev.holds(G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(1, 4)), 0, "");
    return ev.holds(G(ev, Fraction(-1, 2), Fraction(-1, 6), Fraction(2)), 0, "", 1);
}

Verdict c4_40(Eval& ev) {
    const Residue S1 = G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(-1, 3));
    const Residue S2 = G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(1, 81));
    if (ev.pmod(4, {3}))
        return ev.chain({{"S(-1/3)", S1}, {"S(1/81)", S2}, {"0", 0}}, "p≡3 mod 4", 1);
    auto [x, y] = ev.sq2();
    const Residue T2 = ev.sgnmul(ev.sgn(ev.P - 1, 4), S2);
    return ev.any_sign("x", [&](int sx) {
        return ev.chain({{"S(-1/3)", S1}, {"(-1)^((p-1)/4) S(1/81)", T2}, {"2x-p/(2x)", ev.t_minus(2 * sx * x)}},
                        "p≡1 mod 4");
    });
}

Verdict c4_41(Eval& ev) {
    const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(-1, 80));
    if (ev.pmod(4, {3})) return ev.holds(S, 0, "p≡3 mod 4", 1);
    auto [x, y] = ev.sq2();
    return ev.select({
        {ev.pmod(5, {1, 4}), "p≡±1 mod 5",
         [&] { return ev.any_sign("x", [&](int s) { return ev.holds(S, ev.t_minus(2 * s * x), ""); }); }},
        {ev.pmod(5, {2, 3}), "p≡±2 mod 5",
         [&] { return ev.any_sign("y", [&](int s) { return ev.holds(S, ev.t_minus(2 * s * y), ""); }); }},
    });
}

Verdict c4_42(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = G(ev, Fraction(-1, 4), Fraction(-1, 2), Fraction(2));
    if (ev.pmod(8, {5, 7})) return ev.holds(S, 0, "p≡5,7 mod 8", 1);
    i64 x = ev.rep(ev.P, 1, 2).x;
    if (md(x, 4) != 1) x = -x;
    return ev.holds(S, ev.t_minus(2 * x), "p=x^2+2y^2, x≡1 mod 4");
}

i64 A_normalized(Eval& ev, i64* B = nullptr) {
    auto r = ev.rep(ev.P, 1, 3);
    if (B) *B = r.y;
    return md(r.x, 3) == 1 ? r.x : -r.x;
}

Verdict c4_43(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    std::vector<Named> vals = {
        {"S(-1/2,-1/3;-3)", G(ev, Fraction(-1, 2), Fraction(-1, 3), Fraction(-3))},
        {"S(-1/2,-1/3;-1/27)", G(ev, Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 27))},
        {"S(-1/2,-2/3;-1/4)", G(ev, Fraction(-1, 2), Fraction(-2, 3), Fraction(-1, 4))},
        {"(p/5) S(-1/2,-1/3;1/5)", ev.sgnmul(ev.jac(ev.P, 5), G(ev, Fraction(-1, 2), Fraction(-1, 3), Fraction(1, 5)))},
        {"(-1/p) S(-1/2,-1/3;2)", ev.sgnmul(ev.jac(-1), G(ev, Fraction(-1, 2), Fraction(-1, 3), Fraction(2)))},
    };
    if (ev.pmod(3, {2})) {
        vals.push_back({"0", 0});
        return ev.chain(vals, "p≡2 mod 3", 1);
    }
    const i64 A = A_normalized(ev);
    vals.push_back({"2A-p/(2A)", ev.t_minus(2 * A)});
    return ev.chain(vals, "p=A^2+3B^2, 3|A-1");
}

Verdict c4_44(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = G(ev, Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 4));
    if (ev.pmod(3, {2})) return ev.holds(S, 0, "p≡2 mod 3", 1);
    i64 B;
    const i64 A = A_normalized(ev, &B);
    const int s5 = ev.jac(ev.P, 5);
    if ((A * B) % 5 == 0) return ev.holds(S, ev.sgnmul(s5, ev.t_minus(2 * A)), "5|AB");
    const i64 q = md(A * static_cast<i64>(inv_mod(md(B, 5), 5)), 5);
    if (q != 3 && q != 4) B = -B;
    const i64 t = A + 3 * B;
    return ev.holds(S, ev.sgnmul(s5, ev.t_minus(t)), "A/B≡-1,-2 mod 5");
}

Verdict c4_45(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = G(ev, Fraction(-1, 2), Fraction(-1, 6), Fraction(-3, 125));
    if (ev.pmod(3, {2})) return ev.holds(S, 0, "p≡2 mod 3", 1);
    const i64 A = ev.rep(ev.P, 1, 3).x;
    return ev.any_sign("A", [&](int s) { return ev.holds(S, ev.t_minus(2 * s * A), "p=A^2+3B^2"); });
}

}  // namespace

void add_genbinom(std::vector<Statement>& out) {
    auto add = [&](StatementInfo i, std::function<Verdict(Eval&)> f) { out.push_back({std::move(i), std::move(f)}); };
    const std::string thirds_form = "sum binom(-1/3,k)binom(-1/6,k)x^k against binom(-2/3,k)binom(-5/6,k)x^k";
    const std::string short_form = "sum_{k<=(p-5)/6} binom((p-2)/3,k)binom((p-5)/6,k)x^k mod p";
    add(info("4.25", "p>5", 2, kGroup, thirds_form + ", x=-4"), c4_25);
    add(info("4.25cor", "p>5, p=5x^2+3y^2", 1, kGroup, short_form + ", x=-4"), c4_25cor);
    add(info("4.26", "p>3", 2, kGroup, thirds_form + ", x=1/2"), c4_26);
    add(info("4.26cor", "p>3, p=2x^2+3y^2", 1, kGroup, short_form + ", x=1/2"), c4_26cor);
    const char* ids[] = {"4.27", "4.28", "4.29"};
    for (int i = 0; i < 3; ++i) {
        const Gen4p& g = kGen[i];
        const std::string xs = ", x=" + std::to_string(g.x0.num) + "/" + std::to_string(g.x0.den);
        add(info(ids[i], "p>3", 2, kGroup, thirds_form + xs), [&g](Eval& ev) { return c4_27to29(ev, g); });
        add(info(std::string(ids[i]) + "cor", "p>3, 4p=" + std::to_string(g.D) + "x^2+3y^2", 1, kGroup,
                 short_form + xs),
            [&g](Eval& ev) { return c4_27to29cor(ev, g); });
    }
    add(info("4.30", "p>5", 2, kGroup, thirds_form + ", x=-1/80"), c4_30);
    add(info("4.31", "p>11, (p/11)=1, 4p=x^2+11y^2", 2, kGroup, thirds_form + ", x=27/16"),
        [](Eval& ev) { return c4_31(ev, false); });
    add(info("4.31cor", "p>11, (p/11)=1, p≡2 (mod 3)", 1, kGroup, short_form + ", x=27/16"),
        [](Eval& ev) { return c4_31(ev, true); });
    add(info("4.32", "p≡1 (mod 3), 4p=L^2+27M^2, L≡2 (mod 3)", 2, kGroup, thirds_form + ", x=-9/16"), c4_32);
    add(info("4.33", "p≡1,3 (mod 8), p=c^2+2d^2, c≡1 (mod 4)", 2, kGroup, thirds_form + ", x=27/2"), c4_33);
    add(info("4.34", "p≡1 (mod 3), 4p=L^2+27M^2, L≡2 (mod 3)", 2, kGroup, "sum binom(-1/3,k)^2 9^k mod p^2"), c4_34);
    add(info("4.35a", "p≡1 (mod 4), p=x^2+y^2, x≡1 (mod 4)", 2, kGroup, "sum binom(-1/4,k)^2 (-8)^k mod p^2"),
        [](Eval& ev) { return c4_35(ev, true); });
    add(info("4.35b", "p≡1 (mod 4), p=x^2+y^2, x≡1 (mod 4)", 2, kGroup, "sum binom(-1/4,k)^2/(-8)^k mod p^2"),
        [](Eval& ev) { return c4_35(ev, false); });
    add(info("4.36a", "p≡1 (mod 3), p=A^2+3B^2", 2, kGroup, "sum binom(-1/4,k)^2 4^k mod p^2"),
        [](Eval& ev) { return c4_36(ev, 'a'); });
    add(info("4.36b", "p≡1 (mod 3), p=A^2+3B^2", 2, kGroup, "sum binom(-1/4,k)binom(-1/2,k)(-8)^k mod p^2"),
        [](Eval& ev) { return c4_36(ev, 'b'); });
    add(info("4.36c", "p≡1 (mod 3), p=A^2+3B^2", 2, kGroup, "sum binom(-1/4,k)^2/4^k mod p^2"),
        [](Eval& ev) { return c4_36(ev, 'c'); });
    add(info("4.37a", "p≡1,2,4 (mod 7), p=x^2+7y^2", 2, kGroup, "sum binom(-1/4,k)^2 64^k mod p^2"),
        [](Eval& ev) { return c4_37(ev, true); });
    add(info("4.37b", "p≡1,2,4 (mod 7), p=x^2+7y^2", 2, kGroup, "sum binom(-1/4,k)^2/64^k mod p^2"),
        [](Eval& ev) { return c4_37(ev, false); });
    add(info("4.38", "p odd", 2, kGroup, "sum (-1)^k binom(-1/4,k)^2 mod p^2"), c4_38);
    add(info("4.39i", "p≡1 (mod 4), p=x^2+y^2, 2∤x", 2, kGroup,
             "sum binom(-1/4,k)binom(-1/2,k)/4^k against (p/3) sum binom(-1/2,k)binom(-1/6,k)2^k"),
        [](Eval& ev) { return c4_39(ev, 1); });
    add(info("4.39iia", "p≡3 (mod 4)", 2, kGroup, "sum binom(-1/4,k)binom(-1/2,k)/4^k mod p^2"),
        [](Eval& ev) { return c4_39(ev, 2); });
    add(info("4.39iib", "p≡3 (mod 4)", 1, kGroup, "sum binom(-1/2,k)binom(-1/6,k)2^k mod p"),
        [](Eval& ev) { return c4_39(ev, 3); });
    add(info("4.40", "p odd", 2, kGroup, "sum binom(-1/4,k)binom(-1/2,k)/(-3)^k against x=1/81"), c4_40);
    add(info("4.41", "p odd", 2, kGroup, "sum binom(-1/4,k)binom(-1/2,k)/(-80)^k mod p^2"), c4_41);
    add(info("4.42", "p>5", 2, kGroup, "sum binom(-1/4,k)binom(-1/2,k)2^k mod p^2"), c4_42);
    add(info("4.43", "p>5", 2, kGroup, "five sums binom(-1/2,k)binom(-1/3,k)x^k and variants mod p^2"), c4_43);
    add(info("4.44", "p>5", 2, kGroup, "sum binom(-1/2,k)binom(-1/3,k)/(-4)^k mod p^2"), c4_44);
    add(info("4.45", "p>5", 2, kGroup, "sum binom(-1/2,k)binom(-1/6,k)(-3/125)^k mod p^2"), c4_45);
}

}  // namespace congru
