#pragma once

#include <string>
#include <vector>

#include "congru/modarith.hpp"

namespace congru {

// Coefficient families; each term is a product of factorials (or, for GenBinom,
// of generalized binomials) times x^k.
enum class Family {
    Quartic,      // (4k)!/k!^4
    Sextic,       // (6k)!/((3k)! k!^3)
    Six3k,        // binom(2k,k) binom(3k,k) binom(6k,3k), same numbers as Sextic
    Cube2k3k,     // binom(2k,k)^2 binom(3k,k)
    Central1,     // binom(2k,k)
    Central2,     // binom(2k,k)^2
    Central3,     // binom(2k,k)^3
    Binom6k3kSq,  // binom(6k,3k)^2
    Zp,           // binom(2k,k) f_k with Franel f_k
    GenBinom,     // binom(r1,k) binom(r2,k)
};

std::string family_name(Family f);

struct Fraction {
    i64 num = 0, den = 1;
    Fraction() = default;
    Fraction(i64 n, i64 d = 1);
    bool operator==(const Fraction&) const = default;
};

enum class Upper {
    PMinus1,      // p-1
    Half,         // (p-1)/2
    Sixth,        // (p-1)/6
    SixthMinus5,  // (p-5)/6
    FloorSixth,   // [p/6]
};

// Throws NotApplicable when the bound is not an integer for this p.
u64 upper_index(Upper u, u64 p);

struct SumSpec {
    Family family = Family::Quartic;
    Fraction x{1};          // multiplier per index step
    Fraction r1{0}, r2{0};  // GenBinom only
    i64 wa = 0, wb = 1;     // weight wa*k + wb
    Upper upper = Upper::PMinus1;
};

// Convenience constructors.
SumSpec factorial_spec(Family f, Fraction x, Upper u = Upper::PMinus1);
SumSpec zp_spec(i64 m);
SumSpec genbinom_spec(Fraction r1, Fraction r2, Fraction x, Upper u = Upper::PMinus1);
SumSpec weighted(SumSpec s, i64 a, i64 b);

std::vector<Residue> franel_sequence(const PrimePower& pp);

// Sum of spec over k = 0..upper. `franel` (mod p^e' with e' >= e) is used for Zp when given.
Residue evaluate(const SumSpec& spec, const PrimePower& pp, const std::vector<Residue>* franel = nullptr);

// Same engine with an explicit residue multiplier and optional per-term extra factor.
Residue family_sum(Family f, Residue x, u64 K, const PrimePower& pp, const std::vector<Residue>* inner = nullptr,
                   i64 wa = 0, i64 wb = 1);

// Incremental terms t_0..t_K (without weight), valuation tracked exactly.
std::vector<ScaledResidue> incremental_terms(const SumSpec& spec, const PrimePower& pp, u64 K);
// Per-term factorial_quotient evaluation for the factorial families.
ScaledResidue direct_term(const SumSpec& spec, u64 k, const PrimePower& pp);

Residue zp_sum(i64 m, const PrimePower& pp);
Residue factorial_sum(const SumSpec& spec, const PrimePower& pp);
Residue genbinom_sum(Fraction r, Fraction s, Fraction x, const PrimePower& pp, u64 upper);
Residue weighted_sum(const SumSpec& spec, const PrimePower& pp);

Residue legendre_poly_eval(u64 n, Residue t, u64 p);

// Quadratic character table of size p, chi[0] = 0.
std::vector<signed char> quadratic_character(u64 p);
i64 cubic_char_sum(i64 a, i64 b, u64 p);
i64 cubic_char_sum(Residue a, Residue b, u64 p, const std::vector<signed char>& chi);

struct Central3Values {
    Residue half_sum = 0;      // sum binom(2k,k)^3 / m^k, k <= (p-1)/2
    Residue legendre = 0;      // (m(m-64)/p) P_[p/4](t)^2
    Residue char_sum = 0;      // (m(m-64)/p) (cubic character sum)^2
    Residue sextic_short = 0;  // (m(m-16)/p) sum_{k <= [p/6]} ...
    Residue sextic_full = 0;   // same to p-1
    bool agree() const;
};

Central3Values central3_identity_values(i64 m, u64 p, const std::vector<signed char>* chi = nullptr);
bool central3_identity_check(i64 m, u64 p);

}  // namespace congru
