#include "hyperweight/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "hyperweight/util.hpp"

namespace hyperweight {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ambient(f, g);
  if (f.is_zero() || g.is_zero())
    throw InvalidArgument("s_polynomial of a zero polynomial");
  const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial left =
      f.mul_term(f.leading_coefficient().inv(), L.divided_by(f.leading_monomial()));
  Polynomial right =
      g.mul_term(g.leading_coefficient().inv(), L.divided_by(g.leading_monomial()));
  return left - right;
}

ReduceResult reduce(const Polynomial& p,
                    std::span<const Polynomial> divisors) {
  if (divisors.empty()) throw InvalidArgument("reduce: empty divisor list");
  for (const Polynomial& d : divisors) {
    require_same_ambient(p, d);
    if (d.is_zero()) throw InvalidArgument("reduce: zero divisor");
  }
  const Field& F = p.field();
  const uint32_t s = p.arity();

  std::vector<std::vector<Polynomial::Term>> quots(divisors.size());
  std::vector<Polynomial::Term> rem;
  Polynomial h = p;
  while (!h.is_zero()) {
    const Polynomial::Term& lt = h.leading_term();
    bool stepped = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial::Term& dlt = divisors[i].leading_term();
      if (dlt.mono.divides(lt.mono)) {
        FieldElement c = lt.coeff * dlt.coeff.inv();
        Monomial m = lt.mono.divided_by(dlt.mono);
        quots[i].push_back({m, c});
        h = h - divisors[i].mul_term(c, m);
        stepped = true;
        break;
      }
    }
    if (!stepped) {
      rem.push_back(lt);
      h = h.without_leading_term();
    }
  }

  ReduceResult r{.quotients = {}, .remainder = Polynomial(F, s)};
  r.quotients.reserve(divisors.size());
  for (auto& q : quots)
    r.quotients.push_back(Polynomial::from_terms(F, s, std::move(q)));
  r.remainder = Polynomial::from_terms(F, s, std::move(rem));
  return r;
}

namespace {

// Keep only leading-monomial-minimal elements; input sorted ascending by lm.
std::vector<Polynomial> minimalize(std::vector<Polynomial> g) {
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grlex_less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> kept;
  for (Polynomial& x : g) {
    bool redundant = false;
    for (const Polynomial& k : kept) {
      if (k.leading_monomial().divides(x.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(x));
  }
  return kept;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const BuchbergerOptions& opts) {
  if (gens.empty()) throw InvalidArgument("buchberger: empty generating set");
  std::vector<Polynomial> g;
  g.reserve(gens.size());
  for (const Polynomial& x : gens) {
    if (x.is_zero()) throw InvalidArgument("buchberger: zero generator");
    if (!g.empty()) require_same_ambient(g.front(), x);
    g.push_back(x.monic());
  }

  std::deque<std::pair<size_t, size_t>> queue;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) queue.emplace_back(i, j);

  uint64_t steps = 0;
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    if (++steps > opts.max_reductions)
      throw ResourceLimit("buchberger step cap exceeded (" +
                          std::to_string(opts.max_reductions) + " reductions)");
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g).remainder;
    if (!r.is_zero()) {
      const size_t n = g.size();
      for (size_t t = 0; t < n; ++t) queue.emplace_back(t, n);
      g.push_back(r.monic());
    }
  }

  std::vector<Polynomial> basis = minimalize(std::move(g));
  // Tail inter-reduction; leading terms are untouched since the basis is
  // already minimal.
  if (basis.size() > 1) {
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = reduce(basis[i], others).remainder.monic();
    }
  }
  return basis;
}

uint64_t FootprintSpec::box_size() const {
  if (q < 2 || s < 1) throw InvalidArgument("footprint spec needs q >= 2, s >= 1");
  return checked_pow(q - 1, s);
}

namespace {

// prod_i (q - 1 - e_i), zero when any exponent exceeds q - 2.
uint64_t multiples_in_box(std::span<const uint32_t> exps,
                          const FootprintSpec& spec) {
  uint64_t r = 1;
  for (uint32_t e : exps) {
    if (e > spec.q - 2) return 0;
    r = checked_mul(r, spec.q - 1 - e);
  }
  return r;
}

// Signed inclusion-exclusion over the tail lms[idx..], carrying the running
// lcm with the (clipped) base monomial.
__int128 union_complement_terms(const std::vector<Monomial>& lms, size_t idx,
                                const std::vector<uint32_t>& lcm_exps,
                                bool negate, const FootprintSpec& spec) {
  if (idx == lms.size()) {
    uint64_t n = multiples_in_box(lcm_exps, spec);
    return negate ? -static_cast<__int128>(n) : static_cast<__int128>(n);
  }
  __int128 total =
      union_complement_terms(lms, idx + 1, lcm_exps, negate, spec);
  std::vector<uint32_t> next = lcm_exps;
  auto e = lms[idx].exponents();
  for (size_t i = 0; i < next.size(); ++i) next[i] = std::max(next[i], e[i]);
  total += union_complement_terms(lms, idx + 1, next, !negate, spec);
  return total;
}

}  // namespace

uint64_t footprint_size(std::span<const Polynomial> gb,
                        const FootprintSpec& spec,
                        const FootprintOptions& opts) {
  const uint64_t box = spec.box_size();
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb) {
    if (g.is_zero()) throw InvalidArgument("footprint_size: zero polynomial");
    if (g.arity() != spec.s)
      throw InvalidArgument("footprint_size: arity does not match spec");
    const Monomial& lm = g.leading_monomial();
    if (lm.is_constant()) return 0;  // unit ideal
    bool inside = true;
    for (uint32_t e : lm.exponents())
      if (e > spec.q - 2) {
        inside = false;
        break;
      }
    if (inside) lms.push_back(lm);
  }
  if (lms.empty()) return box;

  // Drop lms that are multiples of other lms.
  std::sort(lms.begin(), lms.end(), grlex_less);
  std::vector<Monomial> minimal;
  for (Monomial& m : lms) {
    bool redundant = false;
    for (const Monomial& k : minimal)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(m));
  }

  if (box <= opts.enum_cap) {
    std::vector<uint32_t> exps(spec.s, 0);
    uint64_t count = 0;
    while (true) {
      bool divisible = false;
      for (const Monomial& m : minimal) {
        auto me = m.exponents();
        bool div = true;
        for (size_t i = 0; i < exps.size(); ++i)
          if (me[i] > exps[i]) {
            div = false;
            break;
          }
        if (div) {
          divisible = true;
          break;
        }
      }
      if (!divisible) ++count;
      size_t i = exps.size();
      while (i > 0 && exps[i - 1] == spec.q - 2) exps[--i] = 0;
      if (i == 0) break;
      ++exps[i - 1];
    }
    return count;
  }

  if (minimal.size() > opts.max_subset_lms)
    throw ResourceLimit(
        "footprint box too large to enumerate and too many leading monomials "
        "for inclusion-exclusion (" +
        std::to_string(minimal.size()) + ")");
  std::vector<uint32_t> zero(spec.s, 0);
  // |box| - |union of multiples| via signed subset sums; the empty subset
  // contributes |box| itself.
  __int128 total = union_complement_terms(minimal, 0, zero, false, spec);
  return static_cast<uint64_t>(total);
}

uint64_t count_multiples(const Monomial& m, const FootprintSpec& spec) {
  if (m.arity() != spec.s)
    throw InvalidArgument("count_multiples: arity does not match spec");
  (void)spec.box_size();
  std::vector<uint32_t> e(m.exponents().begin(), m.exponents().end());
  return multiples_in_box(e, spec);
}

uint64_t count_multiples_excluding(const Monomial& m,
                                   std::span<const Monomial> exclusions,
                                   const FootprintSpec& spec) {
  if (exclusions.size() > 8)
    throw InvalidArgument("count_multiples_excluding: more than 8 exclusions");
  if (m.arity() != spec.s)
    throw InvalidArgument("count_multiples_excluding: arity mismatch");
  for (const Monomial& x : exclusions)
    if (x.arity() != spec.s)
      throw InvalidArgument("count_multiples_excluding: arity mismatch");
  __int128 total = 0;
  const uint32_t n = static_cast<uint32_t>(exclusions.size());
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Monomial L = m;
    for (uint32_t b = 0; b < n; ++b)
      if (mask & (1u << b)) L = lcm(L, exclusions[b]);
    uint64_t c = count_multiples(L, spec);
    if (__builtin_popcount(mask) % 2 == 0)
      total += c;
    else
      total -= c;
  }
  return static_cast<uint64_t>(total);
}

}  // namespace hyperweight
