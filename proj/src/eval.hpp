#pragma once

#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "congru/quadform.hpp"
#include "congru/registry.hpp"
#include "congru/sums.hpp"

namespace congru {

// Thrown by helpers to end an evaluation with a fixed verdict.
struct EvalStop {
    Verdict v;
};

struct Named {
    std::string name;
    Residue value;
};

class Eval {
public:
    Eval(const Statement& st, u64 p, std::optional<i64> param, const PrimeContext& ctx, std::optional<int> e_override);

    const Statement& st;
    const u64 p;
    const i64 P;
    const i64 param;
    const int e;
    const PrimePower pp;
    const PrimeContext& ctx;
    std::vector<std::string> trace;
    std::vector<SumRecord> sums;

    [[noreturn]] void na(const std::string& why) const;
    [[noreturn]] void anomaly(const std::string& why) const;
    template <class... T>
    void note(const T&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        trace.push_back(os.str());
    }

    // Residues mod p^e.
    Residue r(i64 v) const { return reduce(v, pp.m); }
    Residue frac(i64 num, i64 den) const;
    Residue inv(Residue a) const;
    Residue mul(Residue a, Residue b) const { return mul_mod(a, b, pp.m); }
    Residue add(Residue a, Residue b) const { return add_mod(a, b, pp.m); }
    Residue sub(Residue a, Residue b) const { return sub_mod(a, b, pp.m); }
    Residue neg(Residue a) const { return neg_mod(a, pp.m); }
    Residue sgnmul(int s, Residue a) const { return s >= 0 ? a : neg(a); }
    Residue pow(i64 base, u64 exp) const { return pow_mod(r(base), exp, pp.m); }
    // t - p/(k t): the recurring right-hand-side shape.
    Residue t_minus(i64 t, i64 k = 1) const { return sub(r(t), frac(P, k * t)); }
    // a t - p/(k t)
    Residue at_minus(i64 a, i64 t, i64 k) const { return sub(r(a * t), frac(P, k * t)); }

    int jac(i64 a) const { return jacobi(a, P); }
    int jac(i64 a, i64 n) const { return jacobi(a, n); }
    // (-1)^(num/den), with the quotient required to be an integer.
    int sgn(i64 num, i64 den = 1) const;
    i64 nos(i64 t) const;

    bool pmod(i64 m, std::initializer_list<i64> classes) const;

    Residue sum(const SumSpec& s);
    Residue sum_at(const SumSpec& s, int e_at);

    // Essentially unique representation N = a x^2 + b y^2 with x, y >= 0.
    std::optional<QuadRep> rep_opt(i64 N, i64 a, i64 b);
    // As rep_opt, but absence is an anomaly (the hypothesis promised one).
    QuadRep rep(i64 N, i64 a, i64 b);
    TwoSquares cd();
    // p = x^2 + y^2 with x odd, both positive.
    std::pair<i64, i64> sq2();

    Verdict holds(Residue lhs, Residue rhs, const std::string& branch, int e_branch = 0) const;
    Verdict chain(const std::vector<Named>& vals, const std::string& branch, int e_branch = 0) const;
    // Evaluate under both choices of an unpinned sign; Holds if either choice holds.
    Verdict any_sign(const std::string& what, const std::function<Verdict(int)>& f) const;

    struct Branch {
        bool cond;
        std::string label;
        std::function<Verdict()> body;
    };
    // Exactly one condition must match; otherwise Anomaly.
    Verdict select(const std::vector<Branch>& branches) const;

    PrimePower at(int e_branch) const { return e_branch <= 0 ? pp : pp.with_exp(e_branch); }
};

std::string show(Residue v, u64 m);

// Statement groups, one per source file.
void add_power_residue(std::vector<Statement>& out);
void add_lucas(std::vector<Statement>& out);
void add_factorial_sums(std::vector<Statement>& out);
void add_zp_sums(std::vector<Statement>& out);
void add_genbinom(std::vector<Statement>& out);

// The p≡13 mod 24 power-residue statement with d replaced by dsign*d.
Verdict conj_2_1_with_d_sign(Eval& ev, int dsign);

inline StatementInfo info(std::string id, std::string hyp, int e, std::string group, std::string formula,
                          ParamKind pk = ParamKind::None, bool proven = false) {
    return StatementInfo{std::move(id), std::move(hyp), e, pk, proven, std::move(group), std::move(formula)};
}

}  // namespace congru
