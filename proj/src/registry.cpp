#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "eval.hpp"

namespace congru {

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::NotApplicable: return "NotApplicable";
        case Status::Anomaly: return "Anomaly";
    }
    return "?";
}

char param_letter(ParamKind k) {
    switch (k) {
        case ParamKind::B: return 'b';
        case ParamKind::K: return 'k';
        case ParamKind::Q: return 'q';
        case ParamKind::M: return 'm';
        case ParamKind::None: break;
    }
    return 0;
}

std::string format_params(ParamKind k, const std::optional<i64>& v) {
    if (k == ParamKind::None || !v) return "";
    return std::string(1, param_letter(k)) + "=" + std::to_string(*v);
}

std::string show(Residue v, u64 m) { return std::to_string(v) + " (mod " + std::to_string(m) + ")"; }

PrimeContext PrimeContext::build(u64 p, int e_max) {
    PrimeContext c;
    c.p = p;
    c.e_max = e_max;
    c.franel = franel_sequence(PrimePower(p, e_max));
    c.chi = quadratic_character(p);
    return c;
}

// ---------------------------------------------------------------- Eval

Eval::Eval(const Statement& st_, u64 p_, std::optional<i64> param_, const PrimeContext& ctx_,
           std::optional<int> e_override)
    : st(st_),
      p(p_),
      P(static_cast<i64>(p_)),
      param(param_.value_or(0)),
      e(e_override.value_or(st_.info.mod_exp)),
      pp(p_, e),
      ctx(ctx_) {}

void Eval::na(const std::string& why) const {
    Verdict v;
    v.status = Status::NotApplicable;
    v.modulus = pp;
    v.diagnostics = why;
    throw EvalStop{v};
}

void Eval::anomaly(const std::string& why) const {
    Verdict v;
    v.status = Status::Anomaly;
    v.modulus = pp;
    v.diagnostics = why;
    throw EvalStop{v};
}

Residue Eval::frac(i64 num, i64 den) const {
    if (den % P == 0) anomaly("p divides the denominator " + std::to_string(den));
    return frac_mod(num, den, pp);
}

Residue Eval::inv(Residue a) const {
    if (a % p == 0) anomaly("division by a multiple of p");
    return inv_mod(a, pp);
}

int Eval::sgn(i64 num, i64 den) const {
    if (num % den != 0)
        anomaly("non-integral exponent " + std::to_string(num) + "/" + std::to_string(den) + " in a sign factor");
    return (num / den) % 2 == 0 ? 1 : -1;
}

i64 Eval::nos(i64 t) const {
    if (t == 0) anomaly("zero coordinate under odd-part normalization");
    return normalize_odd_part_sign(t);
}

bool Eval::pmod(i64 m, std::initializer_list<i64> classes) const {
    i64 r = P % m;
    return std::find(classes.begin(), classes.end(), r) != classes.end();
}

Residue Eval::sum(const SumSpec& s) { return sum_at(s, e); }

Residue Eval::sum_at(const SumSpec& s, int e_at) {
    PrimePower q = pp.with_exp(e_at);
    const std::vector<Residue>* fr = (s.family == Family::Zp && e_at <= ctx.e_max) ? &ctx.franel : nullptr;
    const Residue v = evaluate(s, q, fr);
    sums.push_back({s, q, v});
    return v;
}

std::optional<QuadRep> Eval::rep_opt(i64 N, i64 a, i64 b) {
    auto all = represent(N, a, b);
    if (a == b) {
        std::vector<QuadRep> uniq;
        for (auto& r : all)
            if (r.x >= r.y) uniq.push_back(r);
        all = uniq;
    }
    if (all.empty()) return std::nullopt;
    if (all.size() > 1) {
        std::string s;
        for (auto& r : all) s += " (" + std::to_string(r.x) + "," + std::to_string(r.y) + ")";
        anomaly(std::to_string(N) + " has " + std::to_string(all.size()) + " essentially different representations by " +
                std::to_string(a) + "x^2+" + std::to_string(b) + "y^2:" + s);
    }
    note(N, " = ", a, "*", all[0].x, "^2 + ", b, "*", all[0].y, "^2");
    return all[0];
}

QuadRep Eval::rep(i64 N, i64 a, i64 b) {
    auto r = rep_opt(N, a, b);
    if (!r)
        anomaly("no representation " + std::to_string(N) + " = " + std::to_string(a) + "x^2+" + std::to_string(b) +
                "y^2 although the hypothesis provides one");
    return *r;
}

TwoSquares Eval::cd() {
    TwoSquares t = two_squares_normalized(P);
    note("c=", t.c, " d=", t.d);
    return t;
}

std::pair<i64, i64> Eval::sq2() {
    auto all = represent(P, 1, 1);
    for (auto& r : all)
        if (r.x % 2 == 1) {
            note("p = ", r.x, "^2 + ", r.y, "^2");
            return {r.x, r.y};
        }
    anomaly("p is not a sum of two squares");
}

Verdict Eval::holds(Residue lhs, Residue rhs, const std::string& branch, int e_branch) const {
    const int eb = e_branch <= 0 ? e : std::min(e_branch, e);
    PrimePower q = pp.with_exp(eb);
    Verdict v;
    v.lhs = lhs % q.m;
    v.rhs = rhs % q.m;
    v.status = *v.lhs == *v.rhs ? Status::Holds : Status::Fails;
    v.branch = branch;
    v.modulus = q;
    return v;
}

Verdict Eval::chain(const std::vector<Named>& vals, const std::string& branch, int e_branch) const {
    const int eb = e_branch <= 0 ? e : std::min(e_branch, e);
    PrimePower q = pp.with_exp(eb);
    Verdict v;
    v.branch = branch;
    v.modulus = q;
    v.status = Status::Holds;
    const Residue first = vals.front().value % q.m;
    v.lhs = first;
    v.rhs = vals.back().value % q.m;
    std::string all;
    for (auto& nv : vals) {
        Residue x = nv.value % q.m;
        if (!all.empty()) all += ", ";
        all += nv.name + "=" + std::to_string(x);
        if (x != first && v.status == Status::Holds) {
            v.status = Status::Fails;
            v.rhs = x;
            v.diagnostics = "mismatch at " + nv.name;
        }
    }
    if (v.status == Status::Fails) v.diagnostics += "; " + all;
    return v;
}

Verdict Eval::any_sign(const std::string& what, const std::function<Verdict(int)>& f) const {
    Verdict a = f(1), b = f(-1);
    auto tag = [&](Verdict v, const std::string& msg) {
        v.diagnostics = v.diagnostics.empty() ? msg : msg + "; " + v.diagnostics;
        return v;
    };
    const bool ha = a.status == Status::Holds, hb = b.status == Status::Holds;
    if (ha && hb) return tag(a, "sign-invariant in " + what);
    if (ha) return tag(a, "holds only for " + what + " > 0");
    if (hb) return tag(b, "holds only for " + what + " < 0");
    if (a.status == Status::Fails && b.status == Status::Fails)
        return tag(a, "fails for both signs of " + what + " (other sign: rhs=" + std::to_string(*b.rhs) + ")");
    return a.status == Status::Fails ? b : a;
}

Verdict Eval::select(const std::vector<Branch>& branches) const {
    const Branch* hit = nullptr;
    std::string labels;
    int n = 0;
    for (auto& b : branches) {
        if (!b.cond) continue;
        ++n;
        hit = &b;
        labels += (labels.empty() ? "" : " | ") + b.label;
    }
    if (n == 0) anomaly("no branch condition matches");
    if (n > 1) anomaly("several branch conditions match: " + labels);
    Verdict v = hit->body();
    if (v.branch.empty()) v.branch = hit->label;
    return v;
}

// ---------------------------------------------------------------- catalog

const std::vector<Statement>& catalog() {
    static const std::vector<Statement> cat = [] {
        std::vector<Statement> out;
        add_power_residue(out);
        add_lucas(out);
        add_factorial_sums(out);
        add_zp_sums(out);
        add_genbinom(out);
        return out;
    }();
    return cat;
}

const Statement* find_statement(const std::string& id) {
    for (auto& s : catalog())
        if (s.info.id == id) return &s;
    return nullptr;
}

std::vector<std::string> select_ids(const std::vector<std::string>& selectors) {
    std::set<std::string> chosen;
    for (auto& sel : selectors) {
        bool any = false;
        for (auto& s : catalog()) {
            const std::string& id = s.info.id;
            bool match = sel == "all" || id == sel;
            if (!match && !sel.empty() && sel.back() == '*') match = id.rfind(sel.substr(0, sel.size() - 1), 0) == 0;
            if (!match && id.size() > sel.size() && id.compare(0, sel.size(), sel) == 0)
                match = std::isalpha(static_cast<unsigned char>(id[sel.size()])) != 0;
            if (match) {
                chosen.insert(id);
                any = true;
            }
        }
        if (!any) throw std::invalid_argument("unknown statement id: " + sel);
    }
    std::vector<std::string> out;
    for (auto& s : catalog())
        if (chosen.count(s.info.id)) out.push_back(s.info.id);
    return out;
}

// ---------------------------------------------------------------- check

Verdict check(const ConjectureInstance& inst, const PrimeContext& ctx, std::optional<int> e_override) {
    const Statement* st = find_statement(inst.id);
    if (!st) throw std::invalid_argument("unknown statement id: " + inst.id);
    if (st->info.param != ParamKind::None && !inst.param)
        throw std::invalid_argument(inst.id + " needs parameter " + std::string(1, param_letter(st->info.param)));
    if (st->info.param == ParamKind::None && inst.param)
        throw std::invalid_argument(inst.id + " takes no parameter");
    if (inst.param && !st->fixed_grid.empty() &&
        std::find(st->fixed_grid.begin(), st->fixed_grid.end(), *inst.param) == st->fixed_grid.end())
        throw std::invalid_argument(inst.id + ": parameter outside the admissible set");

    Eval ev(*st, inst.p, inst.param, ctx, e_override);
    Verdict v;
    try {
        if (inst.param && st->param_ok && !st->param_ok(*inst.param)) ev.na("parameter outside the stated class");
        v = st->fn(ev);
    } catch (const EvalStop& s) {
        v = s.v;
    } catch (const NotApplicable& e) {
        v.status = Status::NotApplicable;
        v.modulus = ev.pp;
        v.diagnostics = e.what();
    } catch (const NotAUnit& e) {
        v.status = Status::Anomaly;
        v.modulus = ev.pp;
        v.diagnostics = e.what();
    } catch (const NegativeValuation& e) {
        v.status = Status::Anomaly;
        v.modulus = ev.pp;
        v.diagnostics = e.what();
    }
    v.trace = std::move(ev.trace);
    v.sums = std::move(ev.sums);
    return v;
}

Verdict check(const ConjectureInstance& inst, std::optional<int> e_override) {
    const Statement* st = find_statement(inst.id);
    if (!st) throw std::invalid_argument("unknown statement id: " + inst.id);
    const int e = e_override.value_or(st->info.mod_exp);
    PrimeContext ctx = PrimeContext::build(inst.p, std::max(e, 1));
    return check(inst, ctx, e_override);
}

// ---------------------------------------------------------------- sweep

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi <= 3) return out;
    const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }
    const u64 seg = 1 << 16;
    lo = std::max<u64>(lo, 3);
    for (u64 start = lo; start < hi; start += seg) {
        const u64 end = std::min(hi, start + seg);
        std::vector<char> mark(end - start, 1);
        for (u64 q : base) {
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 j = first; j < end; j += q) mark[j - start] = 0;
        }
        for (u64 n = start; n < end; ++n)
            if (mark[n - start] && n % 2 == 1) out.push_back(n);
    }
    return out;
}

std::vector<i64> param_grid(const Statement& st, const SweepConfig& cfg) {
    if (st.info.param == ParamKind::None) return {0};
    if (!st.fixed_grid.empty()) return st.fixed_grid;
    std::optional<i64> cap;
    switch (st.info.param) {
        case ParamKind::B: cap = cfg.b_max; break;
        case ParamKind::K: cap = cfg.k_max; break;
        case ParamKind::Q: cap = cfg.q_max; break;
        case ParamKind::M: cap = cfg.m_max; break;
        case ParamKind::None: break;
    }
    const i64 hi = cap.value_or(st.grid_max);
    std::vector<i64> out;
    for (i64 v = 1; v <= hi; ++v)
        if (!st.param_ok || st.param_ok(v)) out.push_back(v);
    return out;
}

SweepResult sweep(const SweepConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ids = select_ids(cfg.ids);
    std::vector<const Statement*> sts;
    int e_max = 1;
    for (auto& id : ids) {
        sts.push_back(find_statement(id));
        e_max = std::max(e_max, sts.back()->info.mod_exp);
    }
    if (cfg.e_override) e_max = *cfg.e_override;
    std::vector<std::vector<i64>> grids;
    for (auto* s : sts) grids.push_back(param_grid(*s, cfg));

    const auto primes = primes_in(cfg.pmin, cfg.pmax);
    std::vector<std::vector<SweepRecord>> per_prime(primes.size());
    std::vector<SweepSummary> partial(primes.size());

    auto work = [&](size_t i) {
        const u64 p = primes[i];
        PrimeContext ctx = PrimeContext::build(p, e_max);
        auto& recs = per_prime[i];
        auto& sum = partial[i];
        for (size_t j = 0; j < sts.size(); ++j) {
            const Statement& st = *sts[j];
            for (i64 prm : grids[j]) {
                std::optional<i64> pv;
                if (st.info.param != ParamKind::None) pv = prm;
                Verdict v = check({st.info.id, p, pv}, ctx, cfg.e_override);
                switch (v.status) {
                    case Status::Holds: ++sum.holds; break;
                    case Status::Fails: ++sum.fails; break;
                    case Status::NotApplicable: ++sum.notapplicable; break;
                    case Status::Anomaly: ++sum.anomalies; break;
                }
                if (v.status == Status::NotApplicable && !cfg.include_na) continue;
                v.trace.clear();
                v.sums.clear();
                recs.push_back({st.info.id, p, format_params(st.info.param, pv), std::move(v)});
            }
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < primes.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i; (i = next.fetch_add(1)) < primes.size();) work(i);
            });
        for (auto& th : pool) th.join();
    }

    SweepResult res;
    for (size_t i = 0; i < primes.size(); ++i) {
        for (auto& r : per_prime[i]) res.records.push_back(std::move(r));
        res.summary.holds += partial[i].holds;
        res.summary.fails += partial[i].fails;
        res.summary.notapplicable += partial[i].notapplicable;
        res.summary.anomalies += partial[i].anomalies;
    }
    res.summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace congru
