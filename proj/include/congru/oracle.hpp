#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "congru/sums.hpp"

// Exact big-number reference computations, independent of the modular engines.
namespace congru::oracle {

mpz_class binom(u64 n, u64 k);
mpq_class binom(const mpq_class& r, u64 k);
mpz_class franel(u64 n);

// Exact term t_k of a family (without x^k or weight).
mpq_class term(const SumSpec& s, u64 k);
// Exact rational value of the sum up to upper_index(s.upper, p).
mpq_class sum(const SumSpec& s, u64 p);

// q mod p^e, or nullopt when p divides the reduced denominator.
std::optional<Residue> reduce(const mpq_class& q, const PrimePower& pp);
std::optional<Residue> sum_mod(const SumSpec& s, const PrimePower& pp);

// Legendre polynomial P_n(t) mod p, from its hypergeometric expansion.
Residue legendre_poly(u64 n, Residue t, u64 p);

struct Report {
    std::string suite;
    u64 checks = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
    void expect(bool good, const std::string& what);
};

Report franel_suite(u64 n_max);
Report lucas_suite(u64 n_max);
Report factorial_suite(u64 n_max);
// Every sum evaluated by the catalog at primes <= p_max and e <= 3.
Report sums_suite(u64 p_max);
Report identity_suite(u64 p_max);

Report run_suite(const std::string& name, std::optional<u64> max);
const std::vector<std::string>& suite_names();

}  // namespace congru::oracle
