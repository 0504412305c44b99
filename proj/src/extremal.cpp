#include "hyperweight/extremal.hpp"

#include <algorithm>
#include <set>

#include "hyperweight/groebner.hpp"
#include "hyperweight/util.hpp"

namespace hyperweight {

namespace {

void require_theorem_degree(const CodeParams& p) {
  if (p.d() < 3 || p.d() >= p.s())
    throw InvalidArgument("the weight formulas require 3 <= d < s, got d = " +
                          std::to_string(p.d()) + ", s = " +
                          std::to_string(p.s()));
}

// Validated, normalized input for the remainder machinery.
struct NormalizedInput {
  VarPerm perm;
  Polynomial fn;
};

NormalizedInput normalize_input(const Polynomial& f, uint32_t d) {
  if (!f.is_squarefree_homogeneous(d))
    throw InvalidArgument(
        "expected a square-free homogeneous polynomial of degree " +
        std::to_string(d));
  if (!f.is_monic()) throw InvalidArgument("expected a monic polynomial");
  VarPerm perm = normalizing_permutation(f, d);
  return {perm, perm.normalize(f)};
}

// t1..td with t_skip left out (skip = 0 keeps everything).
Monomial leaders(uint32_t arity, uint32_t d, uint32_t skip) {
  std::vector<uint32_t> e(arity, 0);
  for (uint32_t i = 1; i <= d; ++i)
    if (i != skip) e[i - 1] = 1;
  return Monomial::from_exponents(std::move(e));
}

Polynomial remainder_normalized(const Polynomial& fn, uint32_t j,
                                const CodeParams& p) {
  std::vector<Polynomial> divisors;
  divisors.reserve(p.s() + 1);
  for (uint32_t i = 1; i <= p.s(); ++i)
    divisors.push_back(field_equation(p.field(), p.s(), i));
  divisors.push_back(fn);
  Polynomial s = s_polynomial(field_equation(p.field(), p.s(), j), fn);
  if (s.is_zero()) return s;
  return reduce(s, divisors).remainder;
}

RemainderClass classify_witness(const Monomial& w, uint32_t j,
                                const CodeParams& p, const VarPerm& perm) {
  RemainderClass out;
  out.witness_normalized = w;
  out.witness_original = perm.denormalize(w);
  out.tag = RemainderTag::Other;

  const uint32_t q = p.q(), s = p.s(), d = p.d();
  const uint64_t deg = w.degree();

  if (deg == uint64_t{d} - 1) {
    if (w == leaders(s, d, j)) out.tag = RemainderTag::M1;
    return out;
  }
  if (deg != uint64_t{q} - 2 + d) return out;

  if (w.exp(j) == q - 2) {
    // M2 or M3 shape: strip tj^{q-2} and look at what is left.
    uint32_t doubled = 0;  // variable with exponent 2, if unique
    bool ok = true;
    uint32_t u = 0, v = 0;
    for (uint32_t i = 1; i <= s && ok; ++i) {
      if (i == j) continue;
      uint32_t e = w.exp(i);
      if (e == 0) continue;
      if (e == 1) {
        (i <= d ? u : v) += 1;
      } else if (e == 2 && doubled == 0) {
        doubled = i;
      } else {
        ok = false;
      }
    }
    if (!ok) return out;
    if (doubled == 0) {
      // M2 requires at least two high variables (equivalently u <= d-2).
      if (u + v == d && v >= 2 && u <= d - 2) {
        out.tag = RemainderTag::M2;
        out.u = static_cast<int>(u);
        out.v = static_cast<int>(v);
      }
      return out;
    }
    if (doubled > d && u + v == d - 2) {
      out.tag = RemainderTag::M3;
      out.u = static_cast<int>(u);
      out.v = static_cast<int>(v);
      out.e = static_cast<int>(doubled);
    }
    return out;
  }

  if (w.exp(j) == 0) {
    // M4 shape: all low variables except tj, one high at q-2, one high at 1.
    uint32_t e1 = 0, e2 = 0;
    bool ok = true;
    for (uint32_t i = 1; i <= s && ok; ++i) {
      uint32_t e = w.exp(i);
      if (i <= d) {
        if (i == j ? e != 0 : e != 1) ok = false;
      } else if (e == 0) {
        continue;
      } else if (e == q - 2 && e1 == 0) {
        e1 = i;
      } else if (e == 1 && e2 == 0) {
        e2 = i;
      } else {
        ok = false;
      }
    }
    if (ok && e1 != 0 && e2 != 0 && e1 != e2) out.tag = RemainderTag::M4;
    return out;
  }
  return out;
}

// Splits the non-leading terms of normalized f for pivot j; shared by
// decompose and the pair recovery.
struct Split {
  std::vector<Polynomial::Term> h1, hd1, hd;
};

Split split_terms(const Polynomial& fn, uint32_t j, uint32_t d) {
  const uint32_t s = fn.arity();
  const Monomial tj = Monomial::variable(s, j);
  const Monomial others = leaders(s, d, j);
  Split out;
  bool leading = true;
  for (const auto& t : fn.terms()) {
    if (leading) {  // lm(fn) = t1..td by construction
      leading = false;
      continue;
    }
    if (tj.divides(t.mono)) {
      out.hd1.push_back({t.mono.divided_by(tj), t.coeff});
    } else if (others.divides(t.mono)) {
      out.h1.push_back({t.mono.divided_by(others), t.coeff});
    } else {
      out.hd.push_back({t.mono, t.coeff});
    }
  }
  return out;
}

// Recovers the binomial factors once every pivot's remainder is known to
// vanish; verifies the product reconstructs fn exactly.
std::optional<std::vector<BinomialPair>> recover_pairs(const Polynomial& fn,
                                                       const CodeParams& p) {
  const uint32_t d = p.d(), s = p.s();
  const Field& F = p.field();
  std::vector<BinomialPair> pairs;
  for (uint32_t j = 1; j <= d; ++j) {
    Split sp = split_terms(fn, j, d);
    if (sp.h1.size() != 1) return std::nullopt;
    const Monomial& m = sp.h1.front().mono;
    if (m.degree() != 1) return std::nullopt;
    uint32_t e = 0;
    for (uint32_t i = 1; i <= s; ++i)
      if (m.exp(i) == 1) e = i;
    if (e <= d) return std::nullopt;
    pairs.push_back({j, e, sp.h1.front().coeff});
  }
  Polynomial prod = Polynomial::constant(F, s, F.one());
  for (const BinomialPair& bp : pairs) {
    Polynomial factor = Polynomial::variable(F, s, bp.i) +
                        Polynomial::monomial(F, s, Monomial::variable(s, bp.c),
                                             bp.a);
    prod = prod * factor;
  }
  if (prod != fn) return std::nullopt;
  return pairs;
}

}  // namespace

uint64_t min_distance(const CodeParams& p) {
  require_theorem_degree(p);
  const uint64_t q = p.q(), s = p.s(), d = p.d();
  if (2 * d <= s)
    return checked_mul(checked_pow(q - 2, d), checked_pow(q - 1, s - d));
  return checked_mul(checked_pow(q - 2, s - d), checked_pow(q - 1, d));
}

uint64_t next_to_min(const CodeParams& p) {
  require_theorem_degree(p);
  const uint64_t q = p.q(), s = p.s(), d = p.d();
  if (p.small_d()) {
    return checked_add(
        checked_mul(checked_pow(q - 2, d), checked_pow(q - 1, s - d)),
        checked_mul(checked_pow(q - 2, d), checked_pow(q - 1, s - d - 2)));
  }
  if (p.large_d()) {
    return checked_add(
        checked_mul(checked_pow(q - 2, s - d), checked_pow(q - 1, d)),
        checked_mul(checked_pow(q - 2, s - d), checked_pow(q - 1, d - 2)));
  }
  std::string which = p.s() == 2 * p.d()
                          ? "s = 2d"
                          : (p.s() == 2 * p.d() + 1 ? "s = 2d + 1"
                                                    : "s = 2d - 1");
  throw InvalidArgument("next-to-minimal weight unresolved for " + which +
                        " (no proven closed form)");
}

std::optional<ExperimentalValue> experimental_next_to_min(const CodeParams& p) {
  if (p.d() < 3 || p.q() < 5) return std::nullopt;
  const uint64_t q = p.q(), d = p.d();
  const uint64_t mixed = checked_add((q - 2) * (q - 2), q - 1);
  if (p.s() == 2 * p.d() + 1) {
    uint64_t v = checked_mul(
        checked_mul(checked_pow(q - 2, d - 1), checked_pow(q - 1, d)), mixed);
    return ExperimentalValue{v, "unproven (s = 2d + 1, stated for q >= 5)"};
  }
  if (p.s() == 2 * p.d() - 1) {
    uint64_t v = checked_mul(
        checked_mul(checked_pow(q - 2, d - 2), checked_pow(q - 1, d - 1)),
        mixed);
    return ExperimentalValue{v, "unproven (s = 2d - 1, stated for q >= 5)"};
  }
  return std::nullopt;
}

std::string_view to_string(RemainderTag t) {
  switch (t) {
    case RemainderTag::Zero: return "Zero";
    case RemainderTag::M1: return "M1";
    case RemainderTag::M2: return "M2";
    case RemainderTag::M3: return "M3";
    case RemainderTag::M4: return "M4";
    case RemainderTag::Other: return "Other";
  }
  return "?";
}

uint64_t n_formula(MonClass c, std::optional<uint32_t> v,
                   const CodeParams& p) {
  require_theorem_degree(p);
  const uint64_t q = p.q(), s = p.s(), d = p.d();
  switch (c) {
    case MonClass::M1:
      if (v) throw InvalidArgument("n_formula: M1 takes no v");
      return checked_mul(checked_pow(q - 2, d - 1), checked_pow(q - 1, s - d));
    case MonClass::M2: {
      if (!v || *v < 2 || *v > d)
        throw InvalidArgument("n_formula: M2 needs v in 2..d");
      if (s < d + *v) throw InvalidArgument("n_formula: M2 needs s >= d + v");
      uint64_t diff =
          checked_pow(q - 1, *v - 1) - checked_pow(q - 2, *v - 1);
      return checked_mul(
          checked_mul(checked_pow(q - 2, d), checked_pow(q - 1, s - d - *v)),
          diff);
    }
    case MonClass::M3: {
      if (!v || *v > d - 2)
        throw InvalidArgument("n_formula: M3 needs v in 0..d-2");
      if (s < d + 1 + *v)
        throw InvalidArgument("n_formula: M3 needs s >= d + 1 + v");
      uint64_t diff =
          checked_pow(q - 1, *v + 1) - checked_pow(q - 2, *v + 1);
      return checked_mul(
          checked_mul(q - 3, checked_mul(checked_pow(q - 2, d - 2),
                                         checked_pow(q - 1, s - d - 1 - *v))),
          diff);
    }
    case MonClass::M4:
      if (v) throw InvalidArgument("n_formula: M4 takes no v");
      if (s < d + 2) throw InvalidArgument("n_formula: M4 needs s >= d + 2");
      return checked_mul(checked_pow(q - 2, d), checked_pow(q - 1, s - d - 2));
  }
  throw InvalidArgument("n_formula: unknown class");
}

VarPerm VarPerm::identity(uint32_t s) {
  VarPerm p;
  p.fwd_.resize(s + 1);
  p.inv_.resize(s + 1);
  for (uint32_t i = 0; i <= s; ++i) p.fwd_[i] = p.inv_[i] = i;
  return p;
}

bool VarPerm::is_identity() const {
  for (uint32_t i = 1; i < fwd_.size(); ++i)
    if (fwd_[i] != i) return false;
  return true;
}

Monomial VarPerm::normalize(const Monomial& m) const {
  std::vector<uint32_t> e(m.arity(), 0);
  for (uint32_t i = 1; i <= m.arity(); ++i) e[fwd_[i] - 1] = m.exp(i);
  return Monomial::from_exponents(std::move(e));
}

Monomial VarPerm::denormalize(const Monomial& m) const {
  std::vector<uint32_t> e(m.arity(), 0);
  for (uint32_t i = 1; i <= m.arity(); ++i) e[inv_[i] - 1] = m.exp(i);
  return Monomial::from_exponents(std::move(e));
}

Polynomial VarPerm::normalize(const Polynomial& f) const {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) terms.push_back({normalize(t.mono), t.coeff});
  return Polynomial::from_terms(f.field(), f.arity(), std::move(terms));
}

Polynomial VarPerm::denormalize(const Polynomial& f) const {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms())
    terms.push_back({denormalize(t.mono), t.coeff});
  return Polynomial::from_terms(f.field(), f.arity(), std::move(terms));
}

VarPerm normalizing_permutation(const Polynomial& f, uint32_t d) {
  if (f.is_zero()) throw InvalidArgument("cannot normalize zero");
  const uint32_t s = f.arity();
  const Monomial& lm = f.leading_monomial();
  if (!lm.is_squarefree() || lm.degree() != d)
    throw InvalidArgument(
        "leading monomial is not square-free of degree " + std::to_string(d));
  VarPerm p;
  p.fwd_.assign(s + 1, 0);
  p.inv_.assign(s + 1, 0);
  uint32_t next_low = 1, next_high = d + 1;
  for (uint32_t i = 1; i <= s; ++i) {
    uint32_t target = lm.exp(i) == 1 ? next_low++ : next_high++;
    p.fwd_[i] = target;
    p.inv_[target] = i;
  }
  return p;
}

Decomposition decompose(const Polynomial& f, uint32_t j, uint32_t d) {
  if (j < 1 || j > d)
    throw InvalidArgument("pivot j must lie in 1..d");
  NormalizedInput in = normalize_input(f, d);
  Split sp = split_terms(in.fn, j, d);
  const Field& F = f.field();
  const uint32_t s = f.arity();
  return Decomposition{
      j,
      Polynomial::from_terms(F, s, std::move(sp.h1)),
      Polynomial::from_terms(F, s, std::move(sp.hd1)),
      Polynomial::from_terms(F, s, std::move(sp.hd)),
      in.perm,
      std::move(in.fn)};
}

Polynomial remainder_for_j(const Polynomial& f, uint32_t j,
                           const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s()) throw InvalidArgument("arity mismatch");
  if (j < 1 || j > p.d()) throw InvalidArgument("pivot j must lie in 1..d");
  NormalizedInput in = normalize_input(f, p.d());
  return remainder_normalized(in.fn, j, p);
}

RemainderClass classify_remainder(const Polynomial& f, uint32_t j,
                                  const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s()) throw InvalidArgument("arity mismatch");
  if (j < 1 || j > p.d()) throw InvalidArgument("pivot j must lie in 1..d");
  NormalizedInput in = normalize_input(f, p.d());
  Polynomial r = remainder_normalized(in.fn, j, p);
  if (r.is_zero()) {
    RemainderClass out;
    out.tag = RemainderTag::Zero;
    return out;
  }
  return classify_witness(r.leading_monomial(), j, p, in.perm);
}

std::optional<std::vector<BinomialPair>> is_min_weight_form(
    const Polynomial& f, const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s()) throw InvalidArgument("arity mismatch");
  if (2 * p.d() > p.s())
    throw InvalidArgument(
        "is_min_weight_form is defined only in the regime 2d <= s");
  NormalizedInput in = normalize_input(f, p.d());
  for (uint32_t j = 1; j <= p.d(); ++j)
    if (!remainder_normalized(in.fn, j, p).is_zero()) return std::nullopt;
  return recover_pairs(in.fn, p);
}

Polynomial build_min_weight(const CodeParams& p,
                            std::span<const BinomialPair> pairs) {
  const uint32_t d = p.d(), s = p.s();
  if (2 * d > s)
    throw InvalidArgument("build_min_weight requires 2d <= s");
  if (pairs.size() != d)
    throw InvalidArgument("expected exactly d = " + std::to_string(d) +
                          " factors, got " + std::to_string(pairs.size()));
  std::set<uint32_t> lows;
  for (const BinomialPair& bp : pairs) {
    if (bp.i < 1 || bp.i > d)
      throw InvalidArgument("factor index i must lie in 1..d");
    if (bp.c <= d || bp.c > s)
      throw InvalidArgument("paired index c must lie in d+1..s");
    if (bp.a.is_zero()) throw InvalidArgument("factor coefficient must be a unit");
    require_same_field(&bp.a.field(), &p.field());
    lows.insert(bp.i);
  }
  if (lows.size() != d)
    throw InvalidArgument("factor indices i must cover 1..d exactly once");
  const Field& F = p.field();
  Polynomial prod = Polynomial::constant(F, s, F.one());
  for (const BinomialPair& bp : pairs) {
    Polynomial factor =
        Polynomial::variable(F, s, bp.i) +
        Polynomial::monomial(F, s, Monomial::variable(s, bp.c), bp.a);
    prod = prod * factor;
  }
  if (!prod.is_squarefree_homogeneous(d))
    throw InvalidArgument(
        "the factor product is not square-free (repeated paired index); "
        "its weight is not the minimum-weight count");
  return prod;
}

Polynomial build_next_to_min(const CodeParams& p) {
  require_theorem_degree(p);
  const Field& F = p.field();
  const uint32_t s = p.s(), d = p.d();
  auto var = [&](uint32_t i) { return Polynomial::variable(F, s, i); };
  if (p.small_d()) {
    Polynomial prod = Polynomial::constant(F, s, F.one());
    for (uint32_t i = 1; i <= d - 1; ++i)
      prod = prod * (var(i) - var(d - 1 + i));
    Polynomial block =
        var(2 * d - 1) - var(2 * d) + var(2 * d + 1) - var(2 * d + 2);
    return prod * block;
  }
  if (p.large_d()) {
    const uint32_t r = s - d;  // mirrored degree; 2r + 2 <= s here
    Polynomial prod = Polynomial::constant(F, s, F.one());
    for (uint32_t i = 1; i + 1 <= r; ++i)  // r - 1 binomial factors
      prod = prod * (var(i) - var(r - 1 + i));
    const uint32_t b = 2 * s - 2 * d;  // alternating cubic block on b-1..b+2
    Polynomial block = var(b) * var(b + 1) * var(b + 2) -
                       var(b - 1) * var(b + 1) * var(b + 2) +
                       var(b - 1) * var(b) * var(b + 2) -
                       var(b - 1) * var(b) * var(b + 1);
    Polynomial g = prod * block;
    for (uint32_t i = b + 3; i <= s; ++i) g = g * var(i);  // only if 2d-2 > s
    return g;
  }
  std::string which = s == 2 * d ? "s = 2d"
                                 : (s == 2 * d + 1 ? "s = 2d + 1" : "s = 2d - 1");
  throw InvalidArgument("no proven next-to-minimal construction for " + which);
}

uint64_t weight_lower_bound(const Polynomial& f, const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s()) throw InvalidArgument("arity mismatch");
  if (p.d() < 3 || 2 * p.d() > p.s())
    throw InvalidArgument("weight_lower_bound requires 3 <= d <= s/2");
  NormalizedInput in = normalize_input(f, p.d());
  const uint64_t delta = min_distance(p);
  for (uint32_t j = 1; j <= p.d(); ++j) {
    Polynomial r = remainder_normalized(in.fn, j, p);
    if (!r.is_zero()) {
      const Monomial lmf = leaders(p.s(), p.d(), 0);
      const Monomial excl[] = {lmf};
      return checked_add(delta,
                         count_multiples_excluding(r.leading_monomial(), excl,
                                                   p.footprint_spec()));
    }
  }
  return delta;
}

ClassificationReport classify_all(const Polynomial& f, const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s()) throw InvalidArgument("arity mismatch");
  NormalizedInput in = normalize_input(f, p.d());
  ClassificationReport rep{.perm = in.perm,
                           .normalized_f = in.fn,
                           .per_j = {},
                           .bound_contributions = {},
                           .min_form_applicable = 2 * p.d() <= p.s(),
                           .pairs = std::nullopt,
                           .lower_bound = std::nullopt};
  const Monomial lmf = leaders(p.s(), p.d(), 0);
  bool all_zero = true;
  std::optional<uint64_t> first_contribution;
  for (uint32_t j = 1; j <= p.d(); ++j) {
    Polynomial r = remainder_normalized(in.fn, j, p);
    if (r.is_zero()) {
      RemainderClass rc;
      rc.tag = RemainderTag::Zero;
      rep.per_j.push_back(rc);
      rep.bound_contributions.push_back(0);
      continue;
    }
    all_zero = false;
    rep.per_j.push_back(
        classify_witness(r.leading_monomial(), j, p, in.perm));
    const Monomial excl[] = {lmf};
    uint64_t contrib = count_multiples_excluding(r.leading_monomial(), excl,
                                                 p.footprint_spec());
    rep.bound_contributions.push_back(contrib);
    if (!first_contribution) first_contribution = contrib;
  }
  if (rep.min_form_applicable && all_zero) rep.pairs = recover_pairs(in.fn, p);
  if (p.d() >= 3 && 2 * p.d() <= p.s())
    rep.lower_bound = checked_add(min_distance(p),
                                  first_contribution.value_or(0));
  return rep;
}

InequalityReport verify_inequalities(std::span<const CodeParams> grid) {
  InequalityReport rep;
  for (const CodeParams& p : grid) {
    if (p.d() < 3 || 2 * p.d() + 2 > p.s())
      throw InvalidArgument(
          "inequality grid entries require 3 <= d and 2d + 2 <= s");
    const uint64_t q = p.q(), s = p.s(), d = p.d();
    InequalityEntry entry{static_cast<uint32_t>(q), static_cast<uint32_t>(s),
                          static_cast<uint32_t>(d), true, ""};
    const uint64_t m4 = n_formula(MonClass::M4, std::nullopt, p);
    auto complain = [&](const std::string& msg) {
      entry.pass = false;
      if (!entry.detail.empty()) entry.detail += "; ";
      entry.detail += msg;
    };
    if (m4 > n_formula(MonClass::M1, std::nullopt, p))
      complain("N(M4) > N(M1)");
    for (uint32_t v = 2; v <= d; ++v)
      if (m4 > n_formula(MonClass::M2, v, p))
        complain("N(M4) > N(M2," + std::to_string(v) + ")");
    for (uint32_t v = 1; v <= d - 2; ++v)
      if (m4 > n_formula(MonClass::M3, v, p))
        complain("N(M4) > N(M3," + std::to_string(v) + ")");
    const uint64_t m3_0 = n_formula(MonClass::M3, 0u, p);
    if (m3_0 >= m4) complain("N(M3,0) >= N(M4)");
    const uint64_t gap =
        checked_mul(checked_pow(q - 2, d - 2), checked_pow(q - 1, s - d - 2));
    if (m4 - m3_0 != gap)
      complain("N(M4) - N(M3,0) != (q-2)^{d-2} (q-1)^{s-d-2}");
    rep.all_pass = rep.all_pass && entry.pass;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace hyperweight
