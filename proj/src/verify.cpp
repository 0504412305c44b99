#include "hyperweight/verify.hpp"

#include <chrono>
#include <memory>
#include <sstream>

#include "hyperweight/code.hpp"
#include "hyperweight/extremal.hpp"
#include "hyperweight/groebner.hpp"
#include "hyperweight/util.hpp"

namespace hyperweight {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Independent oracle: walk the whole exponent box and test divisibility
// directly. Deliberately shares no code with count_multiples_excluding.
uint64_t box_count_oracle(const Monomial& m, std::span<const Monomial> excl,
                          const FootprintSpec& spec) {
  std::vector<uint32_t> exps(spec.s, 0);
  uint64_t count = 0;
  auto divisible = [&](const Monomial& d) {
    auto de = d.exponents();
    for (size_t i = 0; i < exps.size(); ++i)
      if (de[i] > exps[i]) return false;
    return true;
  };
  while (true) {
    if (divisible(m)) {
      bool excluded = false;
      for (const Monomial& x : excl)
        if (divisible(x)) {
          excluded = true;
          break;
        }
      if (!excluded) ++count;
    }
    size_t i = exps.size();
    while (i > 0 && exps[i - 1] == spec.q - 2) exps[--i] = 0;
    if (i == 0) break;
    ++exps[i - 1];
  }
  return count;
}

std::vector<Polynomial> make_cubic_corpus(const CodeParams& p, uint32_t count,
                                          SplitMix64& rng) {
  const std::vector<Monomial> basis = hypersimplex_monomials(p);
  const Field& F = p.field();
  std::vector<Polynomial> corpus;
  corpus.reserve(count);
  while (corpus.size() < count) {
    std::vector<Polynomial::Term> terms;
    for (const Monomial& m : basis) {
      uint32_t c = static_cast<uint32_t>(rng.below(p.q()));
      if (c) terms.push_back({m, F.element(c)});
    }
    if (terms.empty()) continue;
    Polynomial f = Polynomial::from_terms(F, p.s(), std::move(terms));
    corpus.push_back(f.monic());
  }
  return corpus;
}

std::vector<BinomialPair> random_pairs(const CodeParams& p, SplitMix64& rng) {
  const uint32_t d = p.d(), s = p.s();
  std::vector<uint32_t> highs;
  for (uint32_t c = d + 1; c <= s; ++c) highs.push_back(c);
  for (uint32_t i = 0; i < d; ++i) {
    uint32_t j = i + static_cast<uint32_t>(rng.below(highs.size() - i));
    std::swap(highs[i], highs[j]);
  }
  const std::vector<FieldElement> units = p.field().units();
  std::vector<BinomialPair> pairs;
  for (uint32_t i = 1; i <= d; ++i)
    pairs.push_back({i, highs[i - 1], units[rng.below(units.size())]});
  return pairs;
}

struct Ctx {
  uint64_t sub_seeds[16];
};

CheckResult check_min_weight_products(const Ctx& ctx) {
  CheckResult r{1, "minimum-weight products evaluate to (q-2)^d (q-1)^{s-d}",
                true, "", 0};
  auto t0 = Clock::now();
  SplitMix64 rng(ctx.sub_seeds[1]);
  struct Case {
    uint32_t p, k, s, d;
    uint64_t expect;
  };
  const Case cases[] = {{2, 2, 8, 3, 1944}, {5, 1, 8, 3, 27648},
                        {2, 2, 6, 3, 216}};
  for (const Case& c : cases) {
    Field F(c.p, c.k);
    CodeParams params(F, c.s, c.d);
    if (min_distance(params) != c.expect) {
      r.pass = false;
      r.detail = "closed form disagrees with the pinned value";
      break;
    }
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<BinomialPair> pairs = random_pairs(params, rng);
      Polynomial f = build_min_weight(params, pairs);
      uint64_t w = weight(evaluate_on_torus(f, params)).weight;
      if (w != c.expect) {
        r.pass = false;
        std::ostringstream os;
        os << "q=" << F.q() << " s=" << c.s << " d=" << c.d << ": weight " << w
           << " != " << c.expect;
        r.detail = os.str();
        break;
      }
    }
    if (!r.pass) break;
  }
  if (r.pass) r.detail = "3 parameter sets x 10 seeded products";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_next_to_min_small(const Ctx&) {
  CheckResult r{2, "next-to-minimal construction, small-d regime", true, "",
                0};
  auto t0 = Clock::now();
  struct Case {
    uint32_t p, k, s, d;
    uint64_t expect;
  };
  const Case cases[] = {{2, 2, 8, 3, 2160}, {5, 1, 8, 3, 29376},
                        {2, 2, 9, 3, 6480}};
  for (const Case& c : cases) {
    Field F(c.p, c.k);
    CodeParams params(F, c.s, c.d);
    if (next_to_min(params) != c.expect) {
      r.pass = false;
      r.detail = "closed form disagrees with the pinned value";
      break;
    }
    Polynomial f = build_next_to_min(params);
    uint64_t w = weight(evaluate_on_torus(f, params)).weight;
    if (w != c.expect) {
      r.pass = false;
      std::ostringstream os;
      os << "q=" << F.q() << " s=" << c.s << " d=" << c.d << ": weight " << w
         << " != " << c.expect;
      r.detail = os.str();
      break;
    }
  }
  if (r.pass) r.detail = "3 parameter sets, brute-force evaluation";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_next_to_min_large(const Ctx&) {
  CheckResult r{3, "next-to-minimal construction, large-d regime", true, "",
                0};
  auto t0 = Clock::now();
  Field F(2, 2);
  CodeParams params(F, 8, 5);
  uint64_t expect = 2160;
  if (next_to_min(params) != expect) {
    r.pass = false;
    r.detail = "closed form disagrees with the pinned value";
  } else {
    Polynomial g = build_next_to_min(params);
    uint64_t w = weight(evaluate_on_torus(g, params)).weight;
    if (w != expect) {
      r.pass = false;
      r.detail = "weight " + std::to_string(w) + " != " +
                 std::to_string(expect);
    }
  }
  if (r.pass) r.detail = "(q,s,d) = (4,8,5), brute-force evaluation";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_exhaustive_spectra(const Ctx&) {
  CheckResult r{4, "exhaustive spectra match the closed forms", true, "", 0};
  auto t0 = Clock::now();
  struct Case {
    uint32_t p, k, s, d;
    uint64_t min_w, second_w;
  };
  const Case cases[] = {{2, 2, 4, 3, 54, 60}, {5, 1, 4, 3, 192, 204},
                        {2, 2, 5, 4, 162, 180}};
  for (const Case& c : cases) {
    Field F(c.p, c.k);
    CodeParams params(F, c.s, c.d);
    SpectrumReport sp = exhaustive_spectrum(params);
    std::ostringstream os;
    if (min_distance(params) != c.min_w || next_to_min(params) != c.second_w) {
      r.pass = false;
      os << "closed forms disagree with pinned values at q=" << F.q();
      r.detail = os.str();
      break;
    }
    if (sp.min_nonzero != c.min_w || !sp.second_nonzero ||
        *sp.second_nonzero != c.second_w) {
      r.pass = false;
      os << "q=" << F.q() << " s=" << c.s << " d=" << c.d << ": spectrum ("
         << sp.min_nonzero << ", "
         << (sp.second_nonzero ? std::to_string(*sp.second_nonzero) : "-")
         << ") != (" << c.min_w << ", " << c.second_w << ")";
      r.detail = os.str();
      break;
    }
  }
  if (r.pass) r.detail = "3 codes enumerated in full";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_counting_formulas(const Ctx&) {
  CheckResult r{5, "counting formulas match subset counts and box enumeration",
                true, "", 0};
  auto t0 = Clock::now();
  struct Case {
    uint32_t p, k;
  };
  const Case cases[] = {{2, 2}, {5, 1}};
  for (const Case& c : cases) {
    Field F(c.p, c.k);
    const uint32_t s = 8, d = 3;
    CodeParams params(F, s, d);
    FootprintSpec spec = params.footprint_spec();
    const uint32_t q = F.q();
    const Monomial lmf =
        Monomial::from_exponents({1, 1, 1, 0, 0, 0, 0, 0});
    const Monomial excl[] = {lmf};

    // Two concrete representatives per class pattern (pivot j = 1).
    struct Pattern {
      MonClass cls;
      std::optional<uint32_t> v;
      Monomial mono;
    };
    std::vector<Pattern> patterns;
    patterns.push_back({MonClass::M1, std::nullopt,
                        Monomial::from_exponents({0, 1, 1, 0, 0, 0, 0, 0})});
    patterns.push_back({MonClass::M2, 2u,
                        Monomial::from_exponents({q - 2, 1, 0, 1, 1, 0, 0, 0})});
    patterns.push_back({MonClass::M2, 2u,
                        Monomial::from_exponents({q - 2, 0, 1, 0, 0, 1, 0, 1})});
    patterns.push_back({MonClass::M2, 3u,
                        Monomial::from_exponents({q - 2, 0, 0, 1, 1, 1, 0, 0})});
    patterns.push_back({MonClass::M2, 3u,
                        Monomial::from_exponents({q - 2, 0, 0, 0, 1, 1, 0, 1})});
    patterns.push_back({MonClass::M3, 0u,
                        Monomial::from_exponents({q - 2, 1, 0, 2, 0, 0, 0, 0})});
    patterns.push_back({MonClass::M3, 0u,
                        Monomial::from_exponents({q - 2, 0, 1, 0, 0, 0, 2, 0})});
    patterns.push_back({MonClass::M3, 1u,
                        Monomial::from_exponents({q - 2, 0, 0, 2, 1, 0, 0, 0})});
    patterns.push_back({MonClass::M3, 1u,
                        Monomial::from_exponents({q - 2, 0, 0, 0, 1, 0, 2, 0})});
    patterns.push_back({MonClass::M4, std::nullopt,
                        Monomial::from_exponents({0, 1, 1, q - 2, 1, 0, 0, 0})});
    patterns.push_back({MonClass::M4, std::nullopt,
                        Monomial::from_exponents({0, 1, 1, 0, 0, 1, q - 2, 0})});

    for (const Pattern& pat : patterns) {
      uint64_t formula = n_formula(pat.cls, pat.v, params);
      uint64_t subset = count_multiples_excluding(pat.mono, excl, spec);
      uint64_t oracle = box_count_oracle(pat.mono, excl, spec);
      if (formula != subset || subset != oracle) {
        r.pass = false;
        std::ostringstream os;
        os << "q=" << q << " pattern " << pat.mono.str() << ": formula "
           << formula << ", subsets " << subset << ", box " << oracle;
        r.detail = os.str();
        break;
      }
    }
    if (!r.pass) break;
  }
  if (r.pass) r.detail = "11 patterns x 2 fields, 3 routes each";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_inequality_grid(const Ctx&) {
  CheckResult r{6, "count inequality grid", true, "", 0};
  auto t0 = Clock::now();
  const uint32_t qs[][2] = {{2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  std::vector<std::unique_ptr<Field>> fields;
  for (auto [p, k] : qs) fields.push_back(std::make_unique<Field>(p, k));
  std::vector<CodeParams> grid;
  for (const auto& F : fields)
    for (uint32_t d : {3u, 4u, 5u})
      for (uint32_t s : {2 * d + 2, 2 * d + 3, 2 * d + 4})
        grid.emplace_back(*F, s, d);
  InequalityReport rep = verify_inequalities(grid);
  if (!rep.all_pass) {
    r.pass = false;
    for (const InequalityEntry& e : rep.entries)
      if (!e.pass) {
        r.detail = "(q,s,d)=(" + std::to_string(e.q) + "," +
                   std::to_string(e.s) + "," + std::to_string(e.d) + "): " +
                   e.detail;
        break;
      }
  } else {
    r.detail = std::to_string(rep.entries.size()) + " parameter sets";
  }
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_classification_corpus(const Ctx& ctx, const Field& F,
                                        const CodeParams& params,
                                        const std::vector<Polynomial>& corpus) {
  (void)ctx;
  (void)F;
  CheckResult r{7, "remainder classification corpus stays within the four "
                   "classes",
                true, "", 0};
  auto t0 = Clock::now();
  uint64_t counts[6] = {0, 0, 0, 0, 0, 0};
  for (const Polynomial& f : corpus) {
    for (uint32_t j = 1; j <= params.d(); ++j) {
      RemainderClass rc = classify_remainder(f, j, params);
      counts[static_cast<int>(rc.tag)]++;
      if (rc.tag == RemainderTag::Other) {
        r.pass = false;
        r.detail = "Other witness " +
                   (rc.witness_normalized ? rc.witness_normalized->str()
                                          : std::string("?")) +
                   " for f = " + f.str();
      }
    }
    if (!r.pass) break;
  }
  if (r.pass) {
    std::ostringstream os;
    os << corpus.size() << " polynomials x " << params.d()
       << " pivots: Zero=" << counts[0] << " M1=" << counts[1]
       << " M2=" << counts[2] << " M3=" << counts[3] << " M4=" << counts[4];
    r.detail = os.str();
  }
  r.millis = ms_since(t0);
  return r;
}

// Does some unit a and some variable t_e (e > d) make t_j + a t_e divide f?
// Divisibility is tested by substitution, an independent route from the
// division engine.
bool divisible_by_some_binomial(const Polynomial& fn, uint32_t j,
                                const CodeParams& p) {
  const Field& F = p.field();
  for (uint32_t e = p.d() + 1; e <= p.s(); ++e) {
    for (const FieldElement& a : F.units()) {
      Polynomial image = substitute(
          fn, j,
          Polynomial::monomial(F, p.s(), Monomial::variable(p.s(), e), -a));
      if (image.is_zero()) return true;
    }
  }
  return false;
}

CheckResult check_zero_divisibility(const Ctx& ctx, const Field& F,
                                    const CodeParams& params,
                                    const std::vector<Polynomial>& corpus) {
  CheckResult r{8, "zero remainder iff binomial divisibility", true, "", 0};
  auto t0 = Clock::now();
  SplitMix64 rng(ctx.sub_seeds[8]);

  std::vector<Polynomial> cases = corpus;
  // 200 constructed divisible cases: (t1 + a t_e) * g with g monic
  // square-free quadratic avoiding t1 and t_e.
  const uint32_t s = params.s(), d = params.d();
  for (int n = 0; n < 200; ++n) {
    uint32_t e = d + 1 + static_cast<uint32_t>(rng.below(s - d));
    FieldElement a = F.units()[rng.below(F.q() - 1)];
    std::vector<uint32_t> vars;
    for (uint32_t v = 2; v <= s; ++v)
      if (v != e) vars.push_back(v);
    std::vector<Polynomial::Term> terms;
    for (size_t x = 0; x < vars.size(); ++x)
      for (size_t y = x + 1; y < vars.size(); ++y) {
        uint32_t c = static_cast<uint32_t>(rng.below(F.q()));
        if (c)
          terms.push_back({Monomial::variable(s, vars[x]) *
                               Monomial::variable(s, vars[y]),
                           F.element(c)});
      }
    if (terms.empty()) {
      --n;
      continue;
    }
    Polynomial g = Polynomial::from_terms(F, s, std::move(terms)).monic();
    Polynomial factor =
        Polynomial::variable(F, s, 1) +
        Polynomial::monomial(F, s, Monomial::variable(s, e), a);
    cases.push_back(factor * g);
  }

  uint64_t zero_count = 0;
  for (const Polynomial& f : cases) {
    VarPerm perm = normalizing_permutation(f, d);
    Polynomial fn = perm.normalize(f);
    for (uint32_t j = 1; j <= d; ++j) {
      bool zero = classify_remainder(f, j, params).tag == RemainderTag::Zero;
      bool divisible = divisible_by_some_binomial(fn, j, params);
      if (zero != divisible) {
        r.pass = false;
        r.detail = std::string("mismatch at pivot ") + std::to_string(j) +
                   (zero ? " (zero, not divisible)" : " (divisible, nonzero)") +
                   " for f = " + f.str();
        break;
      }
      if (zero) ++zero_count;
    }
    if (!r.pass) break;
  }
  if (r.pass) {
    std::ostringstream os;
    os << cases.size() << " polynomials, both directions; " << zero_count
       << " zero pivots seen";
    r.detail = os.str();
  }
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_bound_soundness(const Ctx& ctx, const CodeParams& params,
                                  const std::vector<Polynomial>& corpus) {
  CheckResult r{9, "footprint bound is sound and tight on products", true, "",
                0};
  auto t0 = Clock::now();
  SplitMix64 rng(ctx.sub_seeds[9]);
  Encoder enc(params);
  std::vector<uint16_t> scratch;

  auto true_weight = [&](const Polynomial& f) -> uint64_t {
    auto coords = coords_in_basis(f, params);
    if (!coords) return weight(evaluate_on_torus(f, params)).weight;
    std::vector<uint32_t> reps;
    reps.reserve(coords->size());
    for (const FieldElement& c : *coords) reps.push_back(c.rep());
    return enc.weight_of(reps, scratch);
  };

  for (const Polynomial& f : corpus) {
    uint64_t bound = weight_lower_bound(f, params);
    uint64_t w = true_weight(f);
    if (bound > w) {
      r.pass = false;
      r.detail = "bound " + std::to_string(bound) + " exceeds weight " +
                 std::to_string(w) + " for f = " + f.str();
      break;
    }
  }
  if (r.pass) {
    for (int n = 0; n < 50; ++n) {
      Polynomial f = build_min_weight(params, random_pairs(params, rng));
      uint64_t bound = weight_lower_bound(f, params);
      uint64_t w = true_weight(f);
      if (bound != w || w != min_distance(params)) {
        r.pass = false;
        r.detail = "product form: bound " + std::to_string(bound) +
                   ", weight " + std::to_string(w);
        break;
      }
    }
  }
  if (r.pass) {
    Polynomial f = build_next_to_min(params);
    uint64_t bound = weight_lower_bound(f, params);
    uint64_t w = true_weight(f);
    if (bound != w || w != next_to_min(params)) {
      r.pass = false;
      r.detail = "next-to-minimal construction: bound " +
                 std::to_string(bound) + ", weight " + std::to_string(w);
    }
  }
  if (r.pass)
    r.detail = std::to_string(corpus.size()) +
               " corpus elements <=, 50 products + 1 construction ==";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_footprint_zero_count(const Ctx& ctx) {
  CheckResult r{10, "footprint size equals torus zero count", true, "", 0};
  auto t0 = Clock::now();
  SplitMix64 rng(ctx.sub_seeds[10]);
  Field F(2, 2);
  for (int n = 0; n < 100 && r.pass; ++n) {
    const uint32_t s = 2 + static_cast<uint32_t>(n % 3);
    CodeParams params(F, s, 1);
    // random square-free polynomial: coefficients over every square-free
    // monomial in s variables
    std::vector<Polynomial::Term> terms;
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
      uint32_t c = static_cast<uint32_t>(rng.below(F.q()));
      if (!c) continue;
      std::vector<uint32_t> exps(s, 0);
      for (uint32_t b = 0; b < s; ++b)
        if (mask & (1u << b)) exps[b] = 1;
      terms.push_back({Monomial::from_exponents(std::move(exps)),
                       F.element(c)});
    }
    if (terms.empty()) {
      --n;
      continue;
    }
    Polynomial f = Polynomial::from_terms(F, s, std::move(terms));
    uint64_t via_footprint = zeros_via_footprint(f, params);
    WeightReport wr = weight(evaluate_on_torus(f, params));
    if (via_footprint != wr.zeros) {
      r.pass = false;
      r.detail = "footprint " + std::to_string(via_footprint) + " != zeros " +
                 std::to_string(wr.zeros) + " for f = " + f.str();
    }
  }
  if (r.pass) r.detail = "100 random square-free polynomials, s in 2..4";
  r.millis = ms_since(t0);
  return r;
}

CheckResult check_gap_sampling(const Ctx& ctx) {
  CheckResult r{11, "sampled weights respect the minimum and the gap", true,
                "", 0};
  auto t0 = Clock::now();
  Field F(2, 2);
  CodeParams params(F, 8, 3);
  const uint64_t delta = min_distance(params);      // 1944
  const uint64_t second = next_to_min(params);      // 2160
  auto dist = sample_weights(params, ctx.sub_seeds[11], 100000);
  for (const auto& [w, c] : dist) {
    if (w == 0) continue;
    if (w < delta || (w > delta && w < second)) {
      r.pass = false;
      r.detail = "weight " + std::to_string(w) + " observed " +
                 std::to_string(c) + " times inside the forbidden range";
      break;
    }
  }
  if (r.pass) {
    std::ostringstream os;
    os << "100000 samples, " << dist.size() << " distinct weights, min "
       << dist.begin()->first;
    r.detail = os.str();
  }
  r.millis = ms_since(t0);
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(uint64_t seed) {
  Ctx ctx{};
  SplitMix64 master(seed);
  for (uint64_t& s : ctx.sub_seeds) s = master.next();

  std::vector<CheckResult> out;
  out.push_back(check_min_weight_products(ctx));
  out.push_back(check_next_to_min_small(ctx));
  out.push_back(check_next_to_min_large(ctx));
  out.push_back(check_exhaustive_spectra(ctx));
  out.push_back(check_counting_formulas(ctx));
  out.push_back(check_inequality_grid(ctx));

  Field F(2, 2);
  CodeParams params(F, 8, 3);
  SplitMix64 corpus_rng(ctx.sub_seeds[7]);
  std::vector<Polynomial> corpus = make_cubic_corpus(params, 1000, corpus_rng);
  out.push_back(check_classification_corpus(ctx, F, params, corpus));
  out.push_back(check_zero_divisibility(ctx, F, params, corpus));
  out.push_back(check_bound_soundness(ctx, params, corpus));

  out.push_back(check_footprint_zero_count(ctx));
  out.push_back(check_gap_sampling(ctx));
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace hyperweight
