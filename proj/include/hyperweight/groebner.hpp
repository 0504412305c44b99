#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperweight/polynomial.hpp"

namespace hyperweight {

// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct ReduceResult {
  std::vector<Polynomial> quotients;  // one per divisor, in list order
  Polynomial remainder;
};

// Multivariate division of p by an ordered divisor list: at each step the
// FIRST divisor (in list order) whose leading monomial divides the current
// leading term is used; a leading term no divisor handles moves to the
// remainder. p == sum_i quotients[i] * divisors[i] + remainder, and no
// monomial of the remainder is divisible by any divisor's leading monomial.
ReduceResult reduce(const Polynomial& p, std::span<const Polynomial> divisors);

struct BuchbergerOptions {
  uint64_t max_reductions = 200000;  // S-pair reductions before giving up
};

// Buchberger completion with a FIFO pair queue and the coprime-leading-
// monomial criterion. The output is monic, minimal, inter-reduced, and
// sorted ascending by leading monomial; every input generator reduces to
// zero against it. Deterministic for a fixed input order.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const BuchbergerOptions& opts = {});

// The exponent box 0..q-2 in s variables: the footprint of the torus ideal.
struct FootprintSpec {
  uint32_t q = 0;
  uint32_t s = 0;
  uint64_t box_size() const;  // (q-1)^s, checked
};

struct FootprintOptions {
  uint64_t enum_cap = 10'000'000;    // enumerate the box up to this size
  uint32_t max_subset_lms = 20;      // inclusion-exclusion width past that
};

// Number of box monomials divisible by no leading monomial of gb. The ideal
// of gb must contain every t_i^{q-1} - 1 for the footprint to mean anything;
// leading monomials outside the box are ignored (they divide nothing there).
uint64_t footprint_size(std::span<const Polynomial> gb,
                        const FootprintSpec& spec,
                        const FootprintOptions& opts = {});

// Box monomials divisible by m: prod_i (q-1-e_i), or 0 if m leaves the box.
uint64_t count_multiples(const Monomial& m, const FootprintSpec& spec);

// Box monomials divisible by m and by none of the exclusions, by
// inclusion-exclusion over subsets of the exclusions (at most 8 of them).
uint64_t count_multiples_excluding(const Monomial& m,
                                   std::span<const Monomial> exclusions,
                                   const FootprintSpec& spec);

}  // namespace hyperweight
