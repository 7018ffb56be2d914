#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "congru/modarith.hpp"
#include "congru/sums.hpp"

namespace congru {

struct SumRecord {
    SumSpec spec;
    PrimePower modulus;
    Residue value = 0;
};

enum class Status { Holds, Fails, NotApplicable, Anomaly };
std::string status_name(Status s);

struct Verdict {
    Status status = Status::NotApplicable;
    std::string branch;
    std::optional<Residue> lhs, rhs;
    PrimePower modulus;
    std::string diagnostics;
    std::vector<std::string> trace;  // intermediate values for verbose output
    std::vector<SumRecord> sums;     // every sum evaluated on the way
};

enum class ParamKind { None, B, K, Q, M };
char param_letter(ParamKind k);

struct StatementInfo {
    std::string id;
    std::string hypothesis;  // applicability summary
    int mod_exp = 1;
    ParamKind param = ParamKind::None;
    bool proven = false;
    std::string group;    // power residue, lucas, factorial sum, ...
    std::string formula;  // short statement text
};

// Data shared by every statement evaluated at one prime. Immutable once built.
struct PrimeContext {
    u64 p = 0;
    int e_max = 0;
    std::vector<Residue> franel;     // mod p^e_max
    std::vector<signed char> chi;    // quadratic character mod p
    static PrimeContext build(u64 p, int e_max);
};

struct ConjectureInstance {
    std::string id;
    u64 p = 0;
    std::optional<i64> param;
};

class Eval;
struct Statement {
    StatementInfo info;
    std::function<Verdict(Eval&)> fn;
    std::vector<i64> fixed_grid;         // parameter values when the statement only admits a finite set
    i64 grid_max = 0;                    // default upper bound of an open parameter range
    std::function<bool(i64)> param_ok;   // admissible parameter values
};

const std::vector<Statement>& catalog();
const Statement* find_statement(const std::string& id);

// Ids matched by a selector: the id itself, every id extending it by letters,
// every id starting with a prefix given as "prefix*", or "all".
std::vector<std::string> select_ids(const std::vector<std::string>& selectors);

Verdict check(const ConjectureInstance& inst, std::optional<int> e_override = std::nullopt);
Verdict check(const ConjectureInstance& inst, const PrimeContext& ctx, std::optional<int> e_override);

struct SweepConfig {
    std::vector<std::string> ids{"all"};
    u64 pmin = 3, pmax = 1000;
    std::optional<i64> b_max, k_max, q_max, m_max;
    int jobs = 1;
    std::optional<int> e_override;
    bool include_na = false;
};

struct SweepRecord {
    std::string id;
    u64 p = 0;
    std::string params;
    Verdict verdict;
};

struct SweepSummary {
    u64 holds = 0, fails = 0, notapplicable = 0, anomalies = 0;
    double wall_time = 0;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    SweepSummary summary;
};

std::vector<i64> param_grid(const Statement& st, const SweepConfig& cfg);
std::vector<u64> primes_in(u64 lo, u64 hi);  // odd primes in [lo, hi)
SweepResult sweep(const SweepConfig& cfg);

std::string format_params(ParamKind k, const std::optional<i64>& v);

}  // namespace congru
