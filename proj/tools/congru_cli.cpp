#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "congru/oracle.hpp"
#include "congru/registry.hpp"
#include "congru/report.hpp"

using namespace congru;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kAnomaly = 3;

const char* mod_label(int e) {
    switch (e) {
        case 1: return "mod p";
        case 2: return "mod p²";
        default: return "mod p³";
    }
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int exit_for(Status s) {
    switch (s) {
        case Status::Fails: return kFail;
        case Status::Anomaly: return kAnomaly;
        default: return kOk;
    }
}

int cmd_list() {
    for (const auto& st : catalog()) {
        const auto& i = st.info;
        std::cout << i.id << " | " << i.hypothesis << " | " << mod_label(i.mod_exp) << " | ";
        if (i.param == ParamKind::None) {
            std::cout << "-";
        } else {
            std::cout << param_letter(i.param);
            if (!st.fixed_grid.empty()) {
                std::cout << " in {";
                for (size_t k = 0; k < st.fixed_grid.size(); ++k) std::cout << (k ? "," : "") << st.fixed_grid[k];
                std::cout << "}";
            } else {
                std::cout << " <= " << st.grid_max;
            }
        }
        std::cout << " | " << i.group << (i.proven ? " | PROVEN" : " | conjecture") << " | " << i.formula << "\n";
    }
    return kOk;
}

struct CheckArgs {
    std::string id;
    u64 prime = 0;
    std::optional<i64> b, k, q, m;
    std::optional<int> mod_exp;
    bool verbose = false;
};

int cmd_check(const CheckArgs& a) {
    if (!is_prime(a.prime) || a.prime == 2) {
        std::cerr << "error: p must be an odd prime, got " << a.prime << "\n";
        return kUsage;
    }
    const Statement* st = find_statement(a.id);
    if (!st) {
        std::cerr << "error: unknown statement id " << a.id << "\n";
        return kUsage;
    }
    std::optional<i64> param;
    int given = 0;
    for (auto [letter, v] : {std::pair{'b', a.b}, {'k', a.k}, {'q', a.q}, {'m', a.m}}) {
        if (!v) continue;
        ++given;
        if (letter != param_letter(st->info.param)) {
            std::cerr << "error: " << a.id << " does not take --" << letter << "\n";
            return kUsage;
        }
        param = v;
    }
    if (given > 1) {
        std::cerr << "error: too many parameters\n";
        return kUsage;
    }
    Verdict v;
    try {
        if (a.mod_exp) PrimePower(a.prime, *a.mod_exp);
        v = check({a.id, a.prime, param}, a.mod_exp);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    const SweepRecord rec{a.id, a.prime, format_params(st->info.param, param), v};
    if (a.verbose) {
        for (const auto& t : v.trace) std::cout << "  " << t << "\n";
        for (const auto& s : v.sums)
            std::cout << "  sum " << family_name(s.spec.family) << " x=" << s.spec.x.num << "/" << s.spec.x.den
                      << " mod " << s.modulus.m << " = " << s.value << "\n";
    }
    std::cout << record_json(rec) << "\n";
    return exit_for(v.status);
}

struct SweepArgs {
    std::string ids = "all";
    u64 pmin = 3, pmax = 1000;
    std::optional<i64> b_max, k_max, q_max, m_max;
    int jobs = 1;
    std::string format = "json";
    std::string out;
    std::optional<int> mod_exp;
    bool include_na = false, timing = false;
};

int cmd_sweep(const SweepArgs& a) {
    SweepConfig cfg;
    Format fmt;
    try {
        cfg.ids = split_ids(a.ids);
        if (cfg.ids.empty()) throw std::invalid_argument("empty id list");
        const auto ids = select_ids(cfg.ids);
        fmt = parse_format(a.format);
        int e_max = 1;
        for (const auto& id : ids) e_max = std::max(e_max, find_statement(id)->info.mod_exp);
        if (a.mod_exp) e_max = *a.mod_exp;
        const u128 top = a.pmax;
        u128 pw = 1;
        for (int i = 0; i < e_max; ++i) pw *= top;
        if (pw >= (static_cast<u128>(1) << 63)) throw std::invalid_argument("max^e exceeds 2^63");
        if (a.pmin > a.pmax) throw std::invalid_argument("--min exceeds --max");
        if (a.jobs < 1) throw std::invalid_argument("--jobs must be positive");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    cfg.pmin = a.pmin;
    cfg.pmax = a.pmax;
    cfg.b_max = a.b_max;
    cfg.k_max = a.k_max;
    cfg.q_max = a.q_max;
    cfg.m_max = a.m_max;
    cfg.jobs = a.jobs;
    cfg.e_override = a.mod_exp;
    cfg.include_na = a.include_na;

    const SweepResult res = sweep(cfg);
    if (a.out.empty()) {
        write_report(std::cout, std::cerr, res, fmt, a.timing);
    } else {
        std::ofstream f(a.out);
        if (!f) {
            std::cerr << "error: cannot write " << a.out << "\n";
            return kUsage;
        }
        write_report(f, std::cerr, res, fmt, a.timing);
        if (fmt == Format::Json) std::cerr << summary_line(res.summary, a.timing) << "\n";
    }
    if (res.summary.fails) return kFail;
    if (res.summary.anomalies) return kAnomaly;
    return kOk;
}

int cmd_oracle(const std::string& suite, std::optional<u64> max) {
    const auto t0 = std::chrono::steady_clock::now();
    oracle::Report r;
    try {
        r = oracle::run_suite(suite, max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& m : r.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << "oracle " << r.suite << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.checks << " checks, "
              << r.mismatches.size() << " mismatches, " << secs << " s)\n";
    return r.ok() ? kOk : kAnomaly;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sweeps and checks of prime-modulus congruences"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "Print the statement catalog");

    CheckArgs ca;
    auto* chk = app.add_subcommand("check", "Evaluate one statement at one prime");
    chk->add_option("id", ca.id, "Statement id")->required();
    chk->add_option("-p,--prime", ca.prime, "Odd prime")->required();
    chk->add_option("-b,--b", ca.b, "Parameter b");
    chk->add_option("-k,--k", ca.k, "Parameter k");
    chk->add_option("-q,--q", ca.q, "Parameter q");
    chk->add_option("-m,--m", ca.m, "Parameter m");
    chk->add_option("--mod-exp", ca.mod_exp, "Override the modulus exponent")->check(CLI::Range(1, 3));
    chk->add_flag("-v,--verbose", ca.verbose, "Print intermediate values");

    SweepArgs sa;
    auto* sw = app.add_subcommand("sweep", "Evaluate statements over a prime range");
    sw->add_option("--ids", sa.ids, "Comma-separated ids or prefixes, or all");
    sw->add_option("--min", sa.pmin, "Smallest prime considered");
    sw->add_option("--max", sa.pmax, "Primes are below this bound");
    sw->add_option("--b-max", sa.b_max, "Upper bound of the b grid");
    sw->add_option("--k-max", sa.k_max, "Upper bound of the k grid");
    sw->add_option("--q-max", sa.q_max, "Upper bound of the q grid");
    sw->add_option("--m-max", sa.m_max, "Upper bound of the m grid");
    sw->add_option("-j,--jobs", sa.jobs, "Worker threads");
    sw->add_option("--format", sa.format, "json, csv or tsv")->check(CLI::IsMember({"json", "csv", "tsv"}));
    sw->add_option("-o,--out", sa.out, "Output file");
    sw->add_option("--mod-exp", sa.mod_exp, "Override the modulus exponent")->check(CLI::Range(1, 3));
    sw->add_flag("--include-na", sa.include_na, "Emit NotApplicable records");
    sw->add_flag("--timing", sa.timing, "Add wall_time to the summary");

    std::string suite;
    std::optional<u64> omax;
    auto* orc = app.add_subcommand("oracle", "Run an exact reference suite");
    orc->add_option("suite", suite, "franel, lucas, factorial, sums or identity")->required();
    orc->add_option("--max", omax, "Suite bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (*list) return cmd_list();
    if (*chk) return cmd_check(ca);
    if (*sw) return cmd_sweep(sa);
    if (*orc) return cmd_oracle(suite, omax);
    return kUsage;
}
