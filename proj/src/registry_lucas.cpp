#include "congru/lucas.hpp"
#include "eval.hpp"

namespace congru {

namespace {

i64 md(i64 a, i64 m) { return ((a % m) + m) % m; }

const char* kGroup = "lucas";

struct Coords {
    i64 c, d, x, y;
};

// p ≡ 1 mod 4, p ≠ D, p = x^2 + D y^2 with normalized coordinates.
Coords coords(Eval& ev, i64 D) {
    if (!ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
    if (ev.P == D) ev.na("p equals the form coefficient");
    auto rq = ev.rep_opt(ev.P, 1, D);
    if (!rq) ev.na("p is not of the form x^2+" + std::to_string(D) + "y^2");
    auto [c, d] = ev.cd();
    return {c, d, ev.nos(rq->x), ev.nos(rq->y)};
}

Verdict c3_1(Eval& ev, int part) {
    const i64 b = ev.param;
    auto [c, d, x, y] = coords(ev, b * b + 4);
    const bool four = (x * y) % 4 == 0;
    if (part == 1 && four) ev.na("4 divides xy");
    if (part == 2 && !four) ev.na("4 does not divide xy");
    const auto L = lucas_uv(b, -1, (ev.p - 1) / 4, ev.pp);
    ev.note("U=", L.u, " V=", L.v);
    const bool low = md(b, 8) == 1 || md(b, 8) == 3;
    if (part == 1)
        return ev.select({
            {v2(x) == 1, low ? "2||x, b≡1,3 mod 8" : "2||x, b≡5,7 mod 8",
             [&] { return ev.holds(L.u, ev.sgnmul((low ? 1 : -1) * ev.sgn(d, 4), ev.frac(2 * y, x)), ""); }},
            {v2(y) == 1, "2||y", [&] { return ev.holds(L.u, ev.frac(2 * d * y, c * x), ""); }},
        });
    return ev.select({
        {y % 4 == 0, "4|y", [&] { return ev.holds(L.v, ev.r(2 * ev.sgn(d + y, 4)), ""); }},
        {x % 4 == 0, low ? "4|x, b≡1,3 mod 8" : "4|x, b≡5,7 mod 8",
         [&] { return ev.holds(L.v, ev.sgnmul((low ? -1 : 1) * ev.sgn(x, 4), ev.frac(2 * d, c)), ""); }},
    });
}

Verdict c3_2(Eval& ev, bool u) {
    const i64 b = ev.param;
    auto [c, d, x, y] = coords(ev, 1 + b * b / 4);
    const auto L = lucas_uv(b, -1, (ev.p - 1) / 4, ev.pp);
    if (u)
        return ev.select({
            {v2(x) == 1, "2||x",
             [&] { return ev.holds(L.u, ev.sgnmul(ev.sgn(b + 4, 8) * ev.sgn(d, 4), ev.frac(y, x)), ""); }},
            {v2(y) == 1, "2||y", [&] { return ev.holds(L.u, ev.frac(d * y, c * x), ""); }},
            {(x * y) % 4 == 0, "4|xy", [&] { return ev.holds(L.u, 0, ""); }},
        });
    return ev.select({
        {y % 4 == 0, "4|y", [&] { return ev.holds(L.v, ev.r(2 * ev.sgn(d + y, 4)), ""); }},
        {x % 4 == 0, "4|x",
         [&] { return ev.holds(L.v, ev.sgnmul(ev.sgn(b - 4, 8) * ev.sgn(x, 4), ev.frac(2 * d, c)), ""); }},
        {(x * y) % 4 != 0, "4∤xy", [&] { return ev.holds(L.v, 0, ""); }},
    });
}

Verdict c3_3(Eval& ev, bool u) {
    const i64 b = ev.param;
    auto [c, d, x, y] = coords(ev, 1 + b * b / 4);
    const auto L = lucas_uv(b, -1, (ev.p - 1) / 4, ev.pp);
    const bool four = (x * y) % 4 == 0;
    if (u)
        return ev.select({
            {four, "4|xy", [&] { return ev.holds(L.u, 0, ""); }},
            {!four, "4∤xy",
             [&] { return ev.holds(L.u, ev.sgnmul(-ev.sgn((b / 8 - 1) * y), ev.frac(d * y, c * x)), ""); }},
        });
    return ev.select({
        {four, "4|xy", [&] { return ev.holds(L.v, ev.r(2 * ev.sgn(d + x * y, 4) * ev.sgn((b / 8) * y)), ""); }},
        {!four, "4∤xy", [&] { return ev.holds(L.v, 0, ""); }},
    });
}

Verdict c3_4(Eval& ev, bool u) {
    const i64 b = ev.param;
    auto [c, d, x, y] = coords(ev, 1 + b * b / 4);
    const auto L = lucas_uv(b, -1, (ev.p - 1) / 4, ev.pp);
    if (u)
        return ev.select({
            {v2(y) == 1, "2||y", [&] { return ev.holds(L.u, ev.sgnmul(ev.sgn(b - 2 + d, 4), ev.frac(y, x)), ""); }},
            {y % 4 == 0, "4|y", [&] { return ev.holds(L.u, 0, ""); }},
        });
    return ev.select({
        {v2(y) == 1, "2||y", [&] { return ev.holds(L.v, 0, ""); }},
        {y % 4 == 0, "4|y", [&] { return ev.holds(L.v, ev.r(2 * ev.sgn(d + y, 4)), ""); }},
    });
}

int sign_from_y(Eval& ev, i64 y) {
    const i64 h = (ev.P - 1) / 2 * y;
    return ev.sgn(h * h - 1, 8);
}

Verdict c3_5(Eval& ev) {
    const i64 k = ev.param;
    auto rq = ev.rep_opt(ev.P, 1, k * k + 1);
    if (!rq) ev.na("p is not of the form x^2+(k^2+1)y^2");
    if (!ev.pmod(4, {3})) ev.na("(p+1)/4 is not an integer");
    const int s = sign_from_y(ev, rq->y);
    const auto L = lucas_uv(2 * k, -1, (ev.p + 1) / 4, ev.pp);
    const Residue base = ev.pow(-2, (ev.p + 1) / 4);
    const bool plus = md(k, 8) == 5 || md(k, 8) == 7;
    return ev.holds(L.v, ev.sgnmul(plus ? s : -s, base), plus ? "k≡5,7 mod 8" : "k≡1,3 mod 8");
}

Verdict c3_6(Eval& ev) {
    const i64 k = ev.param;
    auto rq = ev.rep_opt(2 * ev.P, 1, k * k + 4);
    if (!rq) ev.na("2p is not of the form x^2+(k^2+4)y^2");
    if (!ev.pmod(4, {3})) ev.anomaly("p is not 3 mod 4 although 2p=x^2+(k^2+4)y^2");
    const int s = sign_from_y(ev, rq->y);
    const auto L = lucas_uv(k, -1, (ev.p + 1) / 4, ev.pp);
    const i64 k16 = md(k, 16);
    if (md(k, 8) == 1 || md(k, 8) == 3) {
        const bool plus = k16 == 1 || k16 == 11;
        return ev.holds(L.v, ev.sgnmul(plus ? s : -s, ev.pow(-2, (ev.p + 1) / 4)),
                        plus ? "k≡1,11 mod 16" : "k≡3,9 mod 16");
    }
    const bool plus = k16 == 5 || k16 == 15;
    return ev.holds(L.v, ev.sgnmul(plus ? s : -s, ev.pow(2, (ev.p + 1) / 4)), plus ? "k≡5,15 mod 16" : "k≡7,13 mod 16");
}

// sum_{k<=(p-1)/2} binom(2k,k)^2 W_k(b,1), W = U or V
Residue lucas_weighted(Eval& ev, i64 b, bool u) {
    const u64 K = (ev.p - 1) / 2;
    auto st = lucas_stream(b, 1, K, ev.pp);
    std::vector<Residue> w(K + 1);
    for (u64 k = 0; k <= K; ++k) w[k] = u ? st[k].u : st[k].v;
    return family_sum(Family::Central2, 1, K, ev.pp, &w);
}

Verdict c3_7(Eval& ev, int part, bool u) {
    if (ev.P <= 7 || !ev.pmod(7, {1, 2, 4})) ev.na("p is not 1, 2, 4 mod 7 with p > 7");
    if (part == 1 && !ev.pmod(4, {1})) ev.na("p is not 1 mod 4");
    if (part == 2 && !ev.pmod(4, {3})) ev.na("p is not 3 mod 4");
    auto rq = ev.rep(ev.P, 1, 7);
    const Residue S = lucas_weighted(ev, 16, u);
    if (part == 1) {
        const i64 C = md(rq.x, 4) == 1 ? rq.x : -rq.x;
        if (u) return ev.holds(S, 0, "");
        return ev.holds(S, ev.sgnmul(ev.sgn(ev.P - 1, 4), ev.sub(ev.r(4 * C), ev.frac(ev.P, C))), "");
    }
    const i64 D = md(rq.y, 4) == 1 ? rq.y : -rq.y;
    if (u)
        return ev.holds(S, ev.sgnmul(ev.sgn(ev.P - 3, 4), ev.sub(ev.frac(16 * D, 3), ev.frac(4 * ev.P, 21 * D))), "");
    return ev.holds(S, ev.sgnmul(ev.sgn(ev.P + 1, 4), ev.sub(ev.r(84 * D), ev.frac(3 * ev.P, D))), "");
}

Verdict c3_8(Eval& ev) {
    if (ev.P <= 3 || !ev.pmod(13, {1, 3, 4, 9, 10, 12})) ev.na("p is not 1, 3, 4, 9, 10, 12 mod 13 with p > 3");
    return ev.holds(lucas_weighted(ev, 11, true), 0, "");
}

Statement with_b(StatementInfo i, std::function<Verdict(Eval&)> f, i64 gmax, std::function<bool(i64)> ok) {
    Statement s{std::move(i), std::move(f)};
    s.grid_max = gmax;
    s.param_ok = std::move(ok);
    return s;
}

}  // namespace

void add_lucas(std::vector<Statement>& out) {
    auto odd = [](i64 b) { return b % 2 != 0; };
    out.push_back(with_b(info("3.1i", "p≡1 (mod 4), b odd, p=x^2+(b^2+4)y^2, 4∤xy", 1, kGroup,
                              "U_{(p-1)/4}(b,-1) mod p", ParamKind::B),
                         [](Eval& ev) { return c3_1(ev, 1); }, 59, odd));
    out.push_back(with_b(info("3.1ii", "p≡1 (mod 4), b odd, p=x^2+(b^2+4)y^2, 4|xy", 1, kGroup,
                              "V_{(p-1)/4}(b,-1) mod p", ParamKind::B),
                         [](Eval& ev) { return c3_1(ev, 2); }, 59, odd));
    struct BK {
        const char* id;
        const char* hyp;
        int which;
        bool u;
        std::function<bool(i64)> ok;
    };
    const BK bs[] = {
        {"3.2a", "p≡1 (mod 4), b≡4 (mod 8), p=x^2+(b^2/4+1)y^2", 2, true, [](i64 b) { return b % 8 == 4; }},
        {"3.2b", "p≡1 (mod 4), b≡4 (mod 8), p=x^2+(b^2/4+1)y^2", 2, false, [](i64 b) { return b % 8 == 4; }},
        {"3.3a", "p≡1 (mod 4), 8|b, b≠0, p=x^2+(b^2/4+1)y^2", 3, true, [](i64 b) { return b != 0 && b % 8 == 0; }},
        {"3.3b", "p≡1 (mod 4), 8|b, b≠0, p=x^2+(b^2/4+1)y^2", 3, false, [](i64 b) { return b != 0 && b % 8 == 0; }},
        {"3.4a", "p≡1 (mod 4), b≡2 (mod 4), p=x^2+(b^2/4+1)y^2", 4, true, [](i64 b) { return b % 4 == 2; }},
        {"3.4b", "p≡1 (mod 4), b≡2 (mod 4), p=x^2+(b^2/4+1)y^2", 4, false, [](i64 b) { return b % 4 == 2; }},
    };
    for (const auto& k : bs) {
        std::function<Verdict(Eval&)> f;
        if (k.which == 2) f = [u = k.u](Eval& ev) { return c3_2(ev, u); };
        if (k.which == 3) f = [u = k.u](Eval& ev) { return c3_3(ev, u); };
        if (k.which == 4) f = [u = k.u](Eval& ev) { return c3_4(ev, u); };
        out.push_back(with_b(info(k.id, k.hyp, 1, kGroup,
                                  k.u ? "U_{(p-1)/4}(b,-1) mod p" : "V_{(p-1)/4}(b,-1) mod p", ParamKind::B),
                             f, 100, k.ok));
    }
    out.push_back(with_b(info("3.5", "k odd, p≡3 (mod 4), p=x^2+(k^2+1)y^2", 1, kGroup, "V_{(p+1)/4}(2k,-1) mod p",
                              ParamKind::K),
                         c3_5, 59, odd));
    out.push_back(with_b(info("3.6", "k odd, 2p=x^2+(k^2+4)y^2", 1, kGroup, "V_{(p+1)/4}(k,-1) mod p", ParamKind::K),
                         c3_6, 59, odd));
    const char* h7 = "p>7, p≡1,2,4 (mod 7), p=C^2+7D^2";
    out.push_back({info("3.7ia", std::string(h7) + ", p≡1 (mod 4)", 2, kGroup,
                        "sum binom(2k,k)^2 U_k(16,1) mod p^2"),
                   [](Eval& ev) { return c3_7(ev, 1, true); }});
    out.push_back({info("3.7ib", std::string(h7) + ", p≡1 (mod 4)", 2, kGroup,
                        "sum binom(2k,k)^2 V_k(16,1) mod p^2"),
                   [](Eval& ev) { return c3_7(ev, 1, false); }});
    out.push_back({info("3.7iia", std::string(h7) + ", p≡3 (mod 4)", 2, kGroup,
                        "sum binom(2k,k)^2 U_k(16,1) mod p^2"),
                   [](Eval& ev) { return c3_7(ev, 2, true); }});
    out.push_back({info("3.7iib", std::string(h7) + ", p≡3 (mod 4)", 2, kGroup,
                        "sum binom(2k,k)^2 V_k(16,1) mod p^2"),
                   [](Eval& ev) { return c3_7(ev, 2, false); }});
    out.push_back({info("3.8", "p>3, p≡1,3,4,9,10,12 (mod 13)", 1, kGroup, "sum binom(2k,k)^2 U_k(11,1) mod p"),
                   c3_8});
}

}  // namespace congru
