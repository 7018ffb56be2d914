#include "eval.hpp"

namespace congru {

namespace {

const char* kGroup = "Zp sum";

Residue Z(Eval& ev, i64 m) {
    if (m % ev.P == 0) ev.na("p divides " + std::to_string(m));
    return ev.sum(zp_spec(m));
}

Residue lin(Eval& ev, i64 a, i64 x, i64 c) { return ev.r(a * x * x + c * ev.P); }

Verdict c4_14(Eval& ev) {
    const Residue S = Z(ev, -16);
    if (ev.pmod(4, {3})) return ev.holds(S, 0, "p≡3 mod 4");
    auto [x, y] = ev.sq2();
    return ev.select({
        {ev.pmod(12, {1}) && y % 6 == 0, "p≡1 mod 12, 6|y", [&] { return ev.holds(S, lin(ev, 4, x, -2), ""); }},
        {ev.pmod(12, {1}) && (x - 3) % 6 == 0, "p≡1 mod 12, 6|x-3",
         [&] { return ev.holds(S, lin(ev, -4, x, 2), ""); }},
        {ev.pmod(12, {5}), "p≡5 mod 12",
         [&] { return ev.holds(S, ev.sgnmul(ev.jac(x * y, 3), ev.r(4 * x * y)), ""); }},
    });
}

Verdict c4_15(Eval& ev) {
    const Residue S = Z(ev, 96);
    return ev.select({
        {ev.pmod(8, {1, 3}), "p=x^2+2y^2≡1,3 mod 8",
         [&] { return ev.holds(S, ev.sgnmul(ev.jac(ev.P, 3), lin(ev, 4, ev.rep(ev.P, 1, 2).x, -2)), ""); }},
        {ev.pmod(8, {5, 7}), "p≡5,7 mod 8", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_16(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = Z(ev, 50);
    return ev.select({
        {ev.pmod(3, {1}), "p=x^2+3y^2≡1 mod 3",
         [&] { return ev.holds(S, lin(ev, 4, ev.rep(ev.P, 1, 3).x, -2), ""); }},
        {ev.pmod(3, {2}), "p≡2 mod 3", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_17(Eval& ev) {
    if (ev.P <= 5) ev.na("p <= 5");
    const Residue S = Z(ev, 16);
    return ev.select({
        {ev.pmod(20, {1, 9}), "p≡1,9 mod 20", [&] { return ev.holds(S, lin(ev, 4, ev.rep(ev.P, 1, 5).x, -2), ""); }},
        {ev.pmod(20, {3, 7}), "p≡3,7 mod 20",
         [&] { return ev.holds(S, lin(ev, 2, ev.rep(2 * ev.P, 1, 5).x, -2), ""); }},
        {ev.pmod(20, {11, 13, 17, 19}), "p≡11,13,17,19 mod 20", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_18(Eval& ev) {
    if (ev.P <= 3) ev.na("p <= 3");
    const Residue S = Z(ev, 32);
    return ev.select({
        {ev.pmod(24, {1, 7}), "p≡1,7 mod 24", [&] { return ev.holds(S, lin(ev, 4, ev.rep(ev.P, 1, 6).x, -2), ""); }},
        {ev.pmod(24, {5, 11}), "p≡5,11 mod 24",
         [&] { return ev.holds(S, lin(ev, 8, ev.rep(ev.P, 2, 3).x, -2), ""); }},
        {ev.pmod(24, {13, 17, 19, 23}), "p≡13,17,19,23 mod 24", [&] { return ev.holds(S, 0, ""); }},
    });
}

Verdict c4_19(Eval& ev, i64 m) {
    if (ev.P <= 7) ev.na("p <= 7");
    const Residue S = Z(ev, m);
    return ev.select({
        {ev.pmod(30, {1, 19}), "p=x^2+15y^2≡1,19 mod 30",
         [&] { return ev.holds(S, lin(ev, 4, ev.rep(ev.P, 1, 15).x, -2), ""); }},
        {ev.pmod(30, {17, 23}), "p=3x^2+5y^2≡17,23 mod 30",
         [&] { return ev.holds(S, lin(ev, -12, ev.rep(ev.P, 3, 5).x, 2), ""); }},
        {ev.pmod(30, {7, 11, 13, 29}), "p≡7,11,13,29 mod 30", [&] { return ev.holds(S, 0, ""); }},
    });
}

struct FormCase {
    i64 mult, a, b;  // mult*p = a x^2 + b y^2
    i64 coef, pcoef; // rhs = coef x^2 + pcoef p
};

Verdict form_cases(Eval& ev, i64 f, i64 excl, const std::vector<FormCase>& cases, i64 zero_disc) {
    if (ev.P == 3 || ev.P == excl) ev.na("excluded prime");
    const Residue S = Z(ev, f);
    std::vector<Eval::Branch> br;
    std::vector<std::optional<QuadRep>> reps;
    for (const auto& c : cases) reps.push_back(ev.rep_opt(c.mult * ev.P, c.a, c.b));
    for (size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const std::string label = (c.mult == 1 ? "p=" : std::to_string(c.mult) + "p=") + std::to_string(c.a) +
                                  "x^2+" + std::to_string(c.b) + "y^2";
        br.push_back({reps[i].has_value(), label, [&, i] {
                          const i64 x = reps[i]->x;
                          return ev.holds(S, lin(ev, cases[i].coef, x, cases[i].pcoef), "");
                      }});
    }
    br.push_back({ev.jac(zero_disc) == -1, "(" + std::to_string(zero_disc) + "/p)=-1",
                  [&] { return ev.holds(S, 0, ""); }});
    return ev.select(br);
}

const std::vector<std::pair<i64, i64>> kF420 = {{7, -112}, {11, -400}, {19, -2704}, {31, -24304}, {59, -1123600}};
const std::vector<std::pair<i64, i64>> kF421 = {{5, 320}, {7, 896}, {13, 10400}, {17, 39200}};

i64 lookup(const std::vector<std::pair<i64, i64>>& t, i64 b) {
    for (auto& [k, v] : t)
        if (k == b) return v;
    return 0;
}

Verdict c4_20(Eval& ev) {
    const i64 b = ev.param, f = lookup(kF420, b);
    return form_cases(ev, f, b,
                      {{1, 1, 3 * b, 4, -2}, {1, 3, b, -12, 2}, {2, 1, 3 * b, 2, -2}, {2, 3, b, -6, 2}}, -3 * b);
}

Verdict c4_21(Eval& ev) {
    const i64 b = ev.param, f = lookup(kF421, b);
    return form_cases(ev, f, b,
                      {{1, 1, 6 * b, 4, -2}, {1, 2, 3 * b, 8, -2}, {1, 3, 2 * b, -12, 2}, {1, 6, b, -24, 2}}, -6 * b);
}

struct WZ {
    const char* id;
    i64 a, b, m;
    i64 coef;
    // symbol: (top/p) when by_p is false, (p/bottom) when true
    i64 sym;
    bool p_over;
    std::vector<i64> excl;
};

const std::vector<WZ>& wz_table() {
    static const std::vector<WZ> t = {
        {"4.22a", 9, 4, 5, 4, 5, true, {5}},
        {"4.22b", 5, 2, 16, 2, 1, false, {}},
        {"4.22c", 9, 2, 50, 2, -1, false, {5}},
        {"4.22d", 5, 1, 96, 1, -2, false, {}},
        {"4.22e", 6, 1, 320, 1, 15, true, {5}},
        {"4.22f", 90, 13, 896, 13, 7, true, {7}},
        {"4.22g", 102, 11, 10400, 11, 39, true, {5, 13}},
        {"4.23a", 3, 1, -16, 1, -1, false, {}},
        {"4.23b", 15, 4, -49, 4, 3, true, {5, 7}},
        {"4.23c", 9, 2, -112, 2, 7, true, {7}},
        {"4.23d", 99, 17, -400, 17, -1, false, {}},
        {"4.23e", 855, 109, -2704, 109, -1, false, {13}},
        {"4.23f", 585, 58, -24304, 58, -31, false, {7, 31}},
    };
    return t;
}

Verdict weighted_z(Eval& ev, const WZ& w) {
    if (ev.P <= 3) ev.na("p <= 3");
    for (i64 q : w.excl)
        if (ev.P == q) ev.na("excluded prime");
    if (w.m % ev.P == 0) ev.na("p divides " + std::to_string(w.m));
    const Residue S = ev.sum(weighted(zp_spec(w.m), w.a, w.b));
    const int s = w.p_over ? ev.jac(ev.P, w.sym) : ev.jac(w.sym);
    return ev.holds(S, ev.sgnmul(s, ev.r(w.coef * ev.P)), "");
}

}  // namespace

void add_zp_sums(std::vector<Statement>& out) {
    auto add = [&](StatementInfo i, std::function<Verdict(Eval&)> f) { out.push_back({std::move(i), std::move(f)}); };
    add(info("4.14", "p odd", 2, kGroup, "Z_p(-16) mod p^2"), c4_14);
    add(info("4.15", "p odd", 2, kGroup, "Z_p(96) mod p^2"), c4_15);
    add(info("4.16", "p>5", 2, kGroup, "Z_p(50) mod p^2"), c4_16);
    add(info("4.17", "p>5", 2, kGroup, "Z_p(16) mod p^2"), c4_17);
    add(info("4.18", "p>3", 2, kGroup, "Z_p(32) mod p^2"), c4_18);
    add(info("4.19a", "p>7", 2, kGroup, "Z_p(5) mod p^2"), [](Eval& ev) { return c4_19(ev, 5); });
    add(info("4.19b", "p>7", 2, kGroup, "Z_p(-49) mod p^2"), [](Eval& ev) { return c4_19(ev, -49); });
    Statement s20{info("4.20", "p≠2,3,b, p∤f(b)", 2, kGroup, "Z_p(f(b)) mod p^2", ParamKind::B), c4_20};
    for (auto& [b, f] : kF420) s20.fixed_grid.push_back(b);
    out.push_back(std::move(s20));
    Statement s21{info("4.21", "p≠2,3,b, p∤f(b)", 2, kGroup, "Z_p(f(b)) mod p^2", ParamKind::B), c4_21};
    for (auto& [b, f] : kF421) s21.fixed_grid.push_back(b);
    out.push_back(std::move(s21));
    for (const auto& w : wz_table()) {
        std::string hyp = "p>3";
        for (i64 q : w.excl) hyp += ", p≠" + std::to_string(q);
        add(info(w.id, hyp, 2, kGroup,
                 "sum (" + std::to_string(w.a) + "n+" + std::to_string(w.b) + ") binom(2n,n) f_n/(" +
                     std::to_string(w.m) + ")^n mod p^2"),
            [&w](Eval& ev) { return weighted_z(ev, w); });
    }
}

}  // namespace congru
