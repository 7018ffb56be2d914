#include "eval.hpp"

namespace congru {

namespace {

bool cong(i64 a, i64 b, i64 m) { return (a - b) % m == 0; }
i64 md(i64 a, i64 m) { return ((a % m) + m) % m; }

// t is in {±k : k in ks} mod m
bool in_pm(i64 t, std::initializer_list<i64> ks, i64 m) {
    for (i64 k : ks)
        if (md(t - k, m) == 0 || md(t + k, m) == 0) return true;
    return false;
}

const char* kGroup = "power residue";

Verdict t2_1(Eval& ev) {
    if (!ev.pmod(24, {1})) ev.na("p is not 1 mod 24");
    auto [c, d] = ev.cd();
    auto q = ev.rep(ev.P, 1, 3);
    const int s = ev.sgn(q.y, 4);
    const Residue lhs = ev.pow(3, (ev.p - 1) / 8);
    const Residue one = 1, dc = ev.frac(d, c);
    return ev.select({
        {cong(c, s, 3), "c≡(-1)^(y/4) mod 3", [&] { return ev.holds(lhs, one, ""); }},
        {cong(c, -s, 3), "c≡-(-1)^(y/4) mod 3", [&] { return ev.holds(lhs, ev.neg(one), ""); }},
        {cong(d, s, 3), "d≡(-1)^(y/4) mod 3", [&] { return ev.holds(lhs, dc, ""); }},
        {cong(d, -s, 3), "d≡-(-1)^(y/4) mod 3", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
    });
}

Verdict c2_1_impl(Eval& ev, int dsign) {
    if (!ev.pmod(24, {13})) ev.na("p is not 13 mod 24");
    auto [c, d0] = ev.cd();
    const i64 d = dsign * d0;
    auto q = ev.rep(ev.P, 1, 3);
    const i64 x = ev.nos(q.x), y = ev.nos(q.y);
    const Residue lhs = ev.pow(3, (ev.p - 5) / 8);
    const Residue yx = ev.frac(y, x), dyx = ev.frac(d * y, c * x);
    return ev.select({
        {cong(x, c, 3), "x≡c mod 3", [&] { return ev.holds(lhs, yx, ""); }},
        {cong(x, -c, 3), "x≡-c mod 3", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        {cong(x, d, 3), "x≡d mod 3", [&] { return ev.holds(lhs, ev.neg(dyx), ""); }},
        {cong(x, -d, 3), "x≡-d mod 3", [&] { return ev.holds(lhs, dyx, ""); }},
    });
}

Verdict c2_2(Eval& ev, int part) {
    if (!ev.pmod(28, {1, 9, 25})) ev.na("p is not 1, 9, 25 mod 28");
    if (part == 1 && !ev.pmod(8, {1})) ev.na("p is not 1 mod 8");
    if (part == 2 && !ev.pmod(8, {5})) ev.na("p is not 5 mod 8");
    auto [c, d] = ev.cd();
    auto q = ev.rep(ev.P, 1, 7);
    const i64 x = ev.nos(q.x), y = ev.nos(q.y);
    if (part == 1) {
        const Residue lhs = ev.pow(7, (ev.p - 1) / 8);
        const int s = ev.sgn(y, 4);
        const Residue dc = ev.sgnmul(s, ev.frac(d, c));
        return ev.select({
            {c % 7 == 0, "7|c", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
            {d % 7 == 0, "7|d", [&] { return ev.holds(lhs, ev.r(s), ""); }},
            {c % 7 != 0 && cong(c, d, 7), "c≡d mod 7", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
            {c % 7 != 0 && cong(c, -d, 7), "c≡-d mod 7", [&] { return ev.holds(lhs, dc, ""); }},
        });
    }
    const Residue lhs = ev.pow(7, (ev.p - 5) / 8);
    const Residue yx = ev.frac(y, x), dyx = ev.frac(d * y, c * x);
    return ev.select({
        {c % 7 == 0, "7|c", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        {d % 7 == 0, "7|d", [&] { return ev.holds(lhs, yx, ""); }},
        {c % 7 != 0 && cong(c, d, 7), "c≡d mod 7", [&] { return ev.holds(lhs, ev.neg(dyx), ""); }},
        {c % 7 != 0 && cong(c, -d, 7), "c≡-d mod 7", [&] { return ev.holds(lhs, dyx, ""); }},
    });
}

Verdict c2_3(Eval& ev, int part) {
    if (!ev.pmod(20, {1, 9})) ev.na("p is not 1, 9 mod 20");
    if (part == 1 && !ev.pmod(8, {1})) ev.na("p is not 1 mod 8");
    if (part == 2 && !ev.pmod(8, {5})) ev.na("p is not 5 mod 8");
    auto [c, d] = ev.cd();
    auto q = ev.rep(ev.P, 1, 5);
    const i64 x = ev.nos(q.x), y = ev.nos(q.y);
    if (part == 1) {
        const Residue lhs = ev.pow(5, (ev.p - 1) / 8);
        const int s = ev.sgn(d, 4) * delta(y);
        const Residue dc = ev.sgnmul(s, ev.frac(d, c));
        return ev.select({
            {cong(x, c, 5), "x≡c mod 5", [&] { return ev.holds(lhs, ev.r(s), ""); }},
            {cong(x, -c, 5), "x≡-c mod 5", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
            {cong(x, d, 5), "x≡d mod 5", [&] { return ev.holds(lhs, dc, ""); }},
            {cong(x, -d, 5), "x≡-d mod 5", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
        });
    }
    const Residue lhs = ev.pow(5, (ev.p - 5) / 8);
    const int dx = delta(x);
    const Residue yx = ev.sgnmul(dx, ev.frac(y, x)), dyx = ev.sgnmul(dx, ev.frac(d * y, c * x));
    return ev.select({
        {cong(x, c, 5), "x≡c mod 5", [&] { return ev.holds(lhs, dyx, ""); }},
        {cong(x, -c, 5), "x≡-c mod 5", [&] { return ev.holds(lhs, ev.neg(dyx), ""); }},
        {cong(x, d, 5), "x≡d mod 5", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        {cong(x, -d, 5), "x≡-d mod 5", [&] { return ev.holds(lhs, yx, ""); }},
    });
}

Verdict c2_4(Eval& ev) {
    if (!ev.pmod(40, {1, 9})) ev.na("p is not 1, 9 mod 40");
    auto [c, d0] = ev.cd();
    auto q = ev.rep(ev.P, 1, 10);
    const i64 x = md(q.x, 4) == 1 ? q.x : -q.x;
    const Residue lhs = ev.pow(5, (ev.p - 1) / 8);
    return ev.any_sign("d", [&](int ds) {
        const i64 d = ds * d0;
        const int s = ev.sgn(d, 4) * ev.sgn(x - 1, 4);
        const Residue dc = ev.sgnmul(s, ev.frac(d, c));
        return ev.select({
            {cong(x, d, 5), "x≡d mod 5", [&] { return ev.holds(lhs, dc, ""); }},
            {cong(x, -d, 5), "x≡-d mod 5", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
            {cong(x, c, 5), "x≡c mod 5", [&] { return ev.holds(lhs, ev.r(s), ""); }},
            {cong(x, -c, 5), "x≡-c mod 5", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
        });
    });
}

Verdict c2_5(Eval& ev, int part) {
    if (!ev.pmod(52, {1, 9, 17, 25, 29, 49})) ev.na("p is not 1, 9, 17, 25, 29, 49 mod 52");
    if (part == 1 && !ev.pmod(8, {1})) ev.na("p is not 1 mod 8");
    if (part == 2 && !ev.pmod(8, {5})) ev.na("p is not 5 mod 8");
    auto [c, d] = ev.cd();
    auto q = ev.rep(ev.P, 1, 13);
    const i64 x = ev.nos(q.x), y = ev.nos(q.y);
    if (x % 13 == 0) ev.anomaly("13 divides x");
    const i64 t = md((2 * c + 3 * d) * static_cast<i64>(inv_mod(md(x, 13), 13)), 13);
    ev.note("(2c+3d)/x mod 13 = ", t);
    const bool a_pos = t == 1 || t == 3 || t == 9;
    const bool a_neg = t == 12 || t == 10 || t == 4;
    const bool b_pos = t == 2 || t == 5 || t == 6;
    const bool b_neg = t == 11 || t == 8 || t == 7;
    if (part == 1) {
        const Residue lhs = ev.pow(13, (ev.p - 1) / 8);
        const int s = ev.sgn(d, 4) * delta(y);
        const Residue dc = ev.sgnmul(s, ev.frac(d, c));
        return ev.select({
            {a_pos, "(2c+3d)/x≡1,3,9 mod 13", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
            {a_neg, "(2c+3d)/x≡-1,-3,-9 mod 13", [&] { return ev.holds(lhs, dc, ""); }},
            {b_pos, "(2c+3d)/x≡2,5,6 mod 13", [&] { return ev.holds(lhs, ev.r(s), ""); }},
            {b_neg, "(2c+3d)/x≡-2,-5,-6 mod 13", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
        });
    }
    const Residue lhs = ev.pow(13, (ev.p - 5) / 8);
    const int dx = delta(x);
    const Residue yx = ev.sgnmul(dx, ev.frac(y, x)), dyx = ev.sgnmul(dx, ev.frac(d * y, c * x));
    return ev.select({
        {a_pos, "(2c+3d)/x≡1,3,9 mod 13", [&] { return ev.holds(lhs, yx, ""); }},
        {a_neg, "(2c+3d)/x≡-1,-3,-9 mod 13", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        {b_pos, "(2c+3d)/x≡2,5,6 mod 13", [&] { return ev.holds(lhs, dyx, ""); }},
        {b_neg, "(2c+3d)/x≡-2,-5,-6 mod 13", [&] { return ev.holds(lhs, ev.neg(dyx), ""); }},
    });
}

Verdict c2_6(Eval& ev, int part) {
    if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
    if (part == 1 && !ev.pmod(8, {1})) ev.na("p is not 1 mod 8");
    if (part == 2 && !ev.pmod(8, {5})) ev.na("p is not 5 mod 8");
    auto q = ev.rep_opt(ev.P, 1, 17);
    if (!q) ev.na("p is not of the form x^2+17y^2");
    auto [c, d] = ev.cd();
    const i64 x = ev.nos(q->x), y = ev.nos(q->y);
    if (x % 17 == 0) ev.anomaly("17 divides x");
    const i64 t = md((4 * c + d) * static_cast<i64>(inv_mod(md(x, 17), 17)), 17);
    ev.note("(4c+d)/x mod 17 = ", t);
    const bool g67 = in_pm(t, {6, 7}, 17), g35 = in_pm(t, {3, 5}, 17), g14 = in_pm(t, {1, 4}, 17),
               g28 = in_pm(t, {2, 8}, 17);
    if (part == 1) {
        const Residue lhs = ev.pow(17, (ev.p - 1) / 8);
        const int s = ev.sgn(d + x * y, 4);
        const Residue dc = ev.sgnmul(s, ev.frac(d, c));
        return ev.select({
            {g67, "(4c+d)/x≡±6,±7 mod 17", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
            {g35, "(4c+d)/x≡±3,±5 mod 17", [&] { return ev.holds(lhs, dc, ""); }},
            {g14, "(4c+d)/x≡±1,±4 mod 17", [&] { return ev.holds(lhs, ev.r(s), ""); }},
            {g28, "(4c+d)/x≡±2,±8 mod 17", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
        });
    }
    const Residue lhs = ev.pow(17, (ev.p - 5) / 8);
    const int s = ev.sgn(x);
    const Residue yx = ev.sgnmul(s, ev.frac(y, x)), dyx = ev.sgnmul(s, ev.frac(d * y, c * x));
    return ev.select({
        {g67, "(4c+d)/x≡±6,±7 mod 17", [&] { return ev.holds(lhs, yx, ""); }},
        {g35, "(4c+d)/x≡±3,±5 mod 17", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        {g14, "(4c+d)/x≡±1,±4 mod 17", [&] { return ev.holds(lhs, dyx, ""); }},
        {g28, "(4c+d)/x≡±2,±8 mod 17", [&] { return ev.holds(lhs, ev.neg(dyx), ""); }},
    });
}

// kind 7: q ≡ 3 mod 8, kind 8: q ≡ 7 mod 16, kind 9: q ≡ 15 mod 16
Verdict c2_7to9(Eval& ev, int part, int kind) {
    const i64 q = ev.param;
    if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
    if (part == 1 && !ev.pmod(8, {1})) ev.na("p is not 1 mod 8");
    if (part == 2 && !ev.pmod(8, {5})) ev.na("p is not 5 mod 8");
    auto [c, d] = ev.cd();
    if ((c * d) % q != 0) ev.na("q does not divide cd");
    auto rq = ev.rep_opt(ev.P, 1, q);
    if (!rq) ev.na("p is not of the form x^2+qy^2");
    const i64 x = ev.nos(rq->x), y = ev.nos(rq->y);
    if (part == 1) {
        const Residue lhs = ev.pow(q, (ev.p - 1) / 8);
        const int s = ev.sgn(y, 4);
        if (kind == 9) return ev.holds(lhs, ev.r(s), "");
        if (kind == 8)
            return ev.select({
                {d % q == 0, "q|d", [&] { return ev.holds(lhs, ev.r(s), ""); }},
                {c % q == 0, "q|c", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
            });
        const int w = ev.sgn(q - 3, 8);
        const Residue dc = ev.sgnmul(w * s, ev.frac(d, c));
        return ev.select({
            {cong(x, c, q), "x≡c mod q", [&] { return ev.holds(lhs, ev.r(s), ""); }},
            {cong(x, -c, q), "x≡-c mod q", [&] { return ev.holds(lhs, ev.r(-s), ""); }},
            {cong(x, d, q), "x≡d mod q", [&] { return ev.holds(lhs, ev.neg(dc), ""); }},
            {cong(x, -d, q), "x≡-d mod q", [&] { return ev.holds(lhs, dc, ""); }},
        });
    }
    const Residue lhs = ev.pow(q, (ev.p - 5) / 8);
    const Residue yx = ev.frac(y, x);
    if (kind == 9) return ev.holds(lhs, yx, "");
    if (kind == 8)
        return ev.select({
            {d % q == 0, "q|d", [&] { return ev.holds(lhs, yx, ""); }},
            {c % q == 0, "q|c", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        });
    const Residue dyx = ev.sgnmul(ev.sgn(q - 3, 8), ev.frac(d * y, c * x));
    return ev.select({
        {cong(x, c, q), "x≡c mod q", [&] { return ev.holds(lhs, yx, ""); }},
        {cong(x, -c, q), "x≡-c mod q", [&] { return ev.holds(lhs, ev.neg(yx), ""); }},
        {cong(x, d, q), "x≡d mod q", [&] { return ev.holds(lhs, ev.neg(dyx), ""); }},
        {cong(x, -d, q), "x≡-d mod q", [&] { return ev.holds(lhs, dyx, ""); }},
    });
}

Verdict c2_10(Eval& ev, int part) {
    const i64 b = ev.param, D = b * b + 4;
    if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
    if (ev.P == D) ev.na("p = b^2+4");
    auto rq = ev.rep_opt(ev.P, 1, D);
    if (!rq) ev.na("p is not of the form x^2+(b^2+4)y^2");
    auto [c, d] = ev.cd();
    const i64 x = ev.nos(rq->x), y = ev.nos(rq->y);
    const bool four = (x * y) % 4 == 0;
    if (part == 1 && four) ev.na("4 divides xy");
    if (part == 2 && !four) ev.na("4 does not divide xy");
    const Residue t = ev.frac(c * x, d * y);
    const Residue h = ev.inv(ev.r(2));
    const u64 n = (ev.p - 1) / 4;
    const Residue L1 = pow_mod(ev.mul(ev.add(ev.r(b), t), h), n, ev.pp.m);
    const Residue L2 = pow_mod(ev.mul(ev.sub(ev.r(b), t), h), n, ev.pp.m);
    const bool low = md(b, 8) == 1 || md(b, 8) == 3;
    auto dc = [&](int s) { return ev.sgnmul(s, ev.frac(d, c)); };
    if (part == 1) {
        auto ch = [&](Residue r) {
            return ev.chain({{"((b+t)/2)^((p-1)/4)", L1}, {"-((b-t)/2)^((p-1)/4)", ev.neg(L2)}, {"rhs", r}}, "");
        };
        return ev.select({
            {v2(x) == 1, low ? "2||x, b≡1,3 mod 8" : "2||x, b≡5,7 mod 8",
             [&] { return ch(dc((low ? -1 : 1) * ev.sgn(d, 4))); }},
            {v2(y) == 1, "2||y", [&] { return ch(ev.r(1)); }},
        });
    }
    auto ch = [&](Residue r) {
        return ev.chain({{"((b+t)/2)^((p-1)/4)", L1}, {"((b-t)/2)^((p-1)/4)", L2}, {"rhs", r}}, "");
    };
    return ev.select({
        {y % 4 == 0, "4|y", [&] { return ch(ev.r(ev.sgn(d + y, 4))); }},
        {x % 4 == 0, low ? "4|x, b≡1,3 mod 8" : "4|x, b≡5,7 mod 8",
         [&] { return ch(dc((low ? -1 : 1) * ev.sgn(x, 4))); }},
    });
}

bool q_class(i64 q, i64 m, i64 r) { return q > 2 && q % m == r && is_prime(static_cast<u64>(q)); }

}  // namespace

Verdict conj_2_1_with_d_sign(Eval& ev, int dsign) { return c2_1_impl(ev, dsign); }

void add_power_residue(std::vector<Statement>& out) {
    auto add = [&](StatementInfo i, std::function<Verdict(Eval&)> f) { out.push_back({std::move(i), std::move(f)}); };
    add(info("T2.1", "p≡1 (mod 24)", 1, kGroup, "3^((p-1)/8) mod p for p=c^2+d^2=x^2+3y^2", ParamKind::None, true),
        t2_1);
    add(info("2.1", "p≡13 (mod 24)", 1, kGroup, "3^((p-5)/8) mod p for p=c^2+d^2=x^2+3y^2"),
        [](Eval& ev) { return c2_1_impl(ev, 1); });
    add(info("2.2i", "p≡1,9,25 (mod 28), p≡1 (mod 8)", 1, kGroup, "7^((p-1)/8) mod p"),
        [](Eval& ev) { return c2_2(ev, 1); });
    add(info("2.2ii", "p≡1,9,25 (mod 28), p≡5 (mod 8)", 1, kGroup, "7^((p-5)/8) mod p"),
        [](Eval& ev) { return c2_2(ev, 2); });
    add(info("2.3i", "p≡1,9 (mod 20), p≡1 (mod 8)", 1, kGroup, "5^((p-1)/8) mod p"),
        [](Eval& ev) { return c2_3(ev, 1); });
    add(info("2.3ii", "p≡1,9 (mod 20), p≡5 (mod 8)", 1, kGroup, "5^((p-5)/8) mod p"),
        [](Eval& ev) { return c2_3(ev, 2); });
    add(info("2.4", "p≡1,9 (mod 40)", 1, kGroup, "5^((p-1)/8) mod p for p=c^2+d^2=x^2+10y^2"), c2_4);
    add(info("2.5i", "p≡1,9,17,25,29,49 (mod 52), p≡1 (mod 8)", 1, kGroup, "13^((p-1)/8) mod p"),
        [](Eval& ev) { return c2_5(ev, 1); });
    add(info("2.5ii", "p≡1,9,17,25,29,49 (mod 52), p≡5 (mod 8)", 1, kGroup, "13^((p-5)/8) mod p"),
        [](Eval& ev) { return c2_5(ev, 2); });
    add(info("2.6i", "p≡1 (mod 8), p=x^2+17y^2", 1, kGroup, "17^((p-1)/8) mod p"),
        [](Eval& ev) { return c2_6(ev, 1); });
    add(info("2.6ii", "p≡5 (mod 8), p=x^2+17y^2", 1, kGroup, "17^((p-5)/8) mod p"),
        [](Eval& ev) { return c2_6(ev, 2); });

    struct QK {
        const char* id;
        int part, kind;
        i64 m, r;
        const char* hyp;
    };
    const QK qs[] = {
        {"2.7i", 1, 7, 8, 3, "p≡1 (mod 8), q≡3 (mod 8), q|cd, p=x^2+qy^2"},
        {"2.7ii", 2, 7, 8, 3, "p≡5 (mod 8), q≡3 (mod 8), q|cd, p=x^2+qy^2"},
        {"2.8i", 1, 8, 16, 7, "p≡1 (mod 8), q≡7 (mod 16), q|cd, p=x^2+qy^2"},
        {"2.8ii", 2, 8, 16, 7, "p≡5 (mod 8), q≡7 (mod 16), q|cd, p=x^2+qy^2"},
        {"2.9i", 1, 9, 16, 15, "p≡1 (mod 8), q≡15 (mod 16), q|cd, p=x^2+qy^2"},
        {"2.9ii", 2, 9, 16, 15, "p≡5 (mod 8), q≡15 (mod 16), q|cd, p=x^2+qy^2"},
    };
    for (const auto& k : qs) {
        Statement s{info(k.id, k.hyp, 1, kGroup, "q^((p-1)/8) or q^((p-5)/8) mod p", ParamKind::Q),
                    [part = k.part, kind = k.kind](Eval& ev) { return c2_7to9(ev, part, kind); }};
        s.grid_max = 99;
        s.param_ok = [m = k.m, r = k.r](i64 q) { return q_class(q, m, r); };
        out.push_back(std::move(s));
    }
    for (int part : {1, 2}) {
        Statement s{info(part == 1 ? "2.10i" : "2.10ii",
                         part == 1 ? "p≡1 (mod 4), p=x^2+(b^2+4)y^2, 4∤xy" : "p≡1 (mod 4), p=x^2+(b^2+4)y^2, 4|xy", 1,
                         kGroup, "((b±t)/2)^((p-1)/4) mod p with t=cx/(dy)", ParamKind::B),
                    [part](Eval& ev) { return c2_10(ev, part); }};
        s.grid_max = 59;
        s.param_ok = [](i64 b) { return b % 2 != 0; };
        out.push_back(std::move(s));
    }
}

}  // namespace congru
