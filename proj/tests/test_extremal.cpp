#include <algorithm>

#include "doctest.h"
#include "hyperweight/extremal.hpp"
#include "hyperweight/parser.hpp"
#include "hyperweight/util.hpp"
#include "oracles.hpp"

using namespace hyperweight;

namespace {

Polynomial random_cubic(SplitMix64& rng, const CodeParams& p) {
  const auto basis = hypersimplex_monomials(p);
  const Field& F = p.field();
  while (true) {
    std::vector<Polynomial::Term> terms;
    for (const Monomial& m : basis) {
      uint32_t c = static_cast<uint32_t>(rng.below(p.q()));
      if (c) terms.push_back({m, F.element(c)});
    }
    if (terms.empty()) continue;
    return Polynomial::from_terms(F, p.s(), std::move(terms)).monic();
  }
}

std::vector<BinomialPair> draw_pairs(SplitMix64& rng, const CodeParams& p) {
  std::vector<uint32_t> highs;
  for (uint32_t c = p.d() + 1; c <= p.s(); ++c) highs.push_back(c);
  for (uint32_t i = 0; i < p.d(); ++i) {
    uint32_t j = i + static_cast<uint32_t>(rng.below(highs.size() - i));
    std::swap(highs[i], highs[j]);
  }
  auto units = p.field().units();
  std::vector<BinomialPair> pairs;
  for (uint32_t i = 1; i <= p.d(); ++i)
    pairs.push_back({i, highs[i - 1], units[rng.below(units.size())]});
  return pairs;
}

}  // namespace

TEST_CASE("minimum distance closed forms") {
  Field F4(2, 2);
  Field F5(5, 1);
  CHECK(min_distance(CodeParams(F4, 8, 3)) == 1944);
  CHECK(min_distance(CodeParams(F4, 4, 3)) == 54);
  CHECK(min_distance(CodeParams(F5, 8, 3)) == 27648);
  CHECK_THROWS_AS(min_distance(CodeParams(F4, 8, 2)), InvalidArgument);
}

TEST_CASE("next-to-minimal closed forms and the unresolved boundary") {
  Field F4(2, 2);
  CHECK(next_to_min(CodeParams(F4, 8, 3)) == 2160);
  CHECK(next_to_min(CodeParams(F4, 4, 3)) == 60);
  CHECK(next_to_min(CodeParams(F4, 8, 5)) == 2160);
  CHECK_THROWS_WITH_AS(next_to_min(CodeParams(F4, 6, 3)),
                       doctest::Contains("s = 2d"), InvalidArgument);
  CHECK_THROWS_AS(next_to_min(CodeParams(F4, 7, 3)), InvalidArgument);
  CHECK_THROWS_AS(next_to_min(CodeParams(F4, 5, 3)), InvalidArgument);
}

TEST_CASE("experimental boundary values are flagged, never asserted") {
  Field F5(5, 1);
  auto up = experimental_next_to_min(CodeParams(F5, 7, 3));
  REQUIRE(up.has_value());
  CHECK(up->note.find("unproven") != std::string::npos);
  auto down = experimental_next_to_min(CodeParams(F5, 5, 3));
  REQUIRE(down.has_value());
  CHECK(down->note.find("unproven") != std::string::npos);
  CHECK_FALSE(experimental_next_to_min(CodeParams(F5, 6, 3)).has_value());
  Field F4(2, 2);  // stated only for q >= 5
  CHECK_FALSE(experimental_next_to_min(CodeParams(F4, 7, 3)).has_value());
}

TEST_CASE("class-count closed forms at (4,8,3)") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  CHECK(n_formula(MonClass::M1, std::nullopt, p) == 972);
  CHECK(n_formula(MonClass::M3, 0u, p) == 162);
  CHECK(n_formula(MonClass::M4, std::nullopt, p) == 216);
  CHECK(n_formula(MonClass::M2, 2u, p) == 216);
  CHECK(n_formula(MonClass::M2, 3u, p) == 360);
  CHECK_THROWS_AS(n_formula(MonClass::M2, 1u, p), InvalidArgument);
  CHECK_THROWS_AS(n_formula(MonClass::M2, std::nullopt, p), InvalidArgument);
  CHECK_THROWS_AS(n_formula(MonClass::M3, 2u, p), InvalidArgument);
  CHECK_THROWS_AS(n_formula(MonClass::M1, 1u, p), InvalidArgument);
}

TEST_CASE("the normalizing permutation maps the support onto 1..d in order") {
  Field F(2, 2);
  Polynomial f =
      parse_polynomial("(t1 - t3)*(t2 - t4)*(t5 - t6 + t7 - t8)", F, 8);
  // lm = t1 t2 t5
  VarPerm perm = normalizing_permutation(f, 3);
  CHECK(perm.to_normalized(1) == 1);
  CHECK(perm.to_normalized(2) == 2);
  CHECK(perm.to_normalized(5) == 3);
  CHECK(perm.to_normalized(3) == 4);
  CHECK(perm.to_normalized(4) == 5);
  CHECK(perm.to_normalized(6) == 6);
  Polynomial fn = perm.normalize(f);
  CHECK(fn.leading_monomial() ==
        Monomial::from_exponents({1, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(perm.denormalize(fn) == f);
}

TEST_CASE("decomposition splits terms by divisibility") {
  Field F(5, 1);
  SUBCASE("mixed terms") {
    Polynomial f = parse_polynomial(
        "t1*t2*t3 + t2*t3*t4 + t1*t2*t5 + t4*t5*t6", F, 6);
    Decomposition dec = decompose(f, 1, 3);
    CHECK(dec.perm.is_identity());
    CHECK(dec.h1 == parse_polynomial("t4", F, 6));
    CHECK(dec.hd1 == parse_polynomial("t2*t5", F, 6));
    CHECK(dec.hd == parse_polynomial("t4*t5*t6", F, 6));
  }
  SUBCASE("pure monomial") {
    Polynomial f = parse_polynomial("t1*t2*t3", F, 6);
    for (uint32_t j = 1; j <= 3; ++j) {
      Decomposition dec = decompose(f, j, 3);
      CHECK(dec.h1.is_zero());
      CHECK(dec.hd1.is_zero());
      CHECK(dec.hd.is_zero());
    }
  }
  SUBCASE("binomial factor times a complement form") {
    // f = (t1 + 2 t5)(t2 t3 + t4 t6), pivot 1
    Polynomial f =
        parse_polynomial("(t1 + 2*t5)*(t2*t3 + t4*t6)", F, 6);
    Decomposition dec = decompose(f, 1, 3);
    CHECK(dec.h1 == parse_polynomial("2*t5", F, 6));
    CHECK(dec.hd1 == parse_polynomial("t4*t6", F, 6));
    CHECK(dec.hd == parse_polynomial("2*t4*t5*t6", F, 6));
  }
  SUBCASE("the pieces reassemble f") {
    SplitMix64 rng(51);
    Field F4(2, 2);
    CodeParams p(F4, 8, 3);
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial f = random_cubic(rng, p);
      for (uint32_t j = 1; j <= 3; ++j) {
        Decomposition dec = decompose(f, j, 3);
        const uint32_t s = p.s();
        std::vector<uint32_t> lead(s, 0), hat(s, 0);
        for (uint32_t i = 1; i <= 3; ++i) lead[i - 1] = 1;
        for (uint32_t i = 1; i <= 3; ++i)
          if (i != j) hat[i - 1] = 1;
        Polynomial rebuilt =
            Polynomial::monomial(F4, s, Monomial::from_exponents(lead),
                                 F4.one()) +
            Polynomial::variable(F4, s, j) * dec.hd1 +
            Polynomial::monomial(F4, s, Monomial::from_exponents(hat),
                                 F4.one()) *
                dec.h1 +
            dec.hd;
        CHECK(rebuilt == dec.normalized_f);
        // constraints on the pieces
        for (const auto& t : dec.hd1.terms()) CHECK(t.mono.exp(j) == 0);
        for (const auto& t : dec.hd.terms()) CHECK(t.mono.exp(j) == 0);
        for (const auto& t : dec.h1.terms()) {
          CHECK(t.mono.degree() == 1);
          for (uint32_t i = 1; i <= 3; ++i) CHECK(t.mono.exp(i) == 0);
        }
      }
    }
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(decompose(parse_polynomial("t1^2*t2", F, 4), 1, 3),
                    InvalidArgument);
    CHECK_THROWS_AS(decompose(parse_polynomial("2*t1*t2*t3", F, 4), 1, 3),
                    InvalidArgument);
    CHECK_THROWS_AS(decompose(parse_polynomial("t1*t2*t3", F, 4), 4, 3),
                    InvalidArgument);
  }
}

TEST_CASE("remainders for the pinned examples") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  SUBCASE("divisible input gives a zero remainder") {
    Polynomial f =
        parse_polynomial("(t1 + g^1*t4)*(t2*t3 + t5*t6)", F, 8);
    CHECK(remainder_for_j(f, 1, p).is_zero());
  }
  SUBCASE("two disjoint monomials") {
    Polynomial f = parse_polynomial("t1*t2*t3 + t4*t5*t6", F, 8);
    Polynomial r = remainder_for_j(f, 1, p);
    REQUIRE_FALSE(r.is_zero());
    CHECK(r.leading_monomial() ==
          Monomial::from_exponents({2, 0, 0, 1, 1, 1, 0, 0}));
  }
  SUBCASE("the small-d construction has a nonzero pivot") {
    Polynomial f = build_next_to_min(p);
    // pivot 3 corresponds to t5, the third variable of the leading support
    Polynomial r = remainder_for_j(f, 3, p);
    CHECK_FALSE(r.is_zero());
  }
}

TEST_CASE("classification of the pinned examples") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  SUBCASE("zero class") {
    Polynomial f =
        parse_polynomial("(t1 + g^2*t7)*(t2*t3 + t4*t5)", F, 8);
    CHECK(classify_remainder(f, 1, p).tag == RemainderTag::Zero);
  }
  SUBCASE("M2 with u=0, v=3") {
    Polynomial f = parse_polynomial("t1*t2*t3 + t4*t5*t6", F, 8);
    RemainderClass rc = classify_remainder(f, 1, p);
    CHECK(rc.tag == RemainderTag::M2);
    CHECK(rc.u == 0);
    CHECK(rc.v == 3);
    REQUIRE(rc.witness_normalized.has_value());
    CHECK(*rc.witness_normalized ==
          Monomial::from_exponents({2, 0, 0, 1, 1, 1, 0, 0}));
  }
  SUBCASE("M1 for a pure monomial") {
    Polynomial f = parse_polynomial("t1*t2*t3", F, 8);
    RemainderClass rc = classify_remainder(f, 2, p);
    CHECK(rc.tag == RemainderTag::M1);
    CHECK(*rc.witness_normalized ==
          Monomial::from_exponents({1, 0, 1, 0, 0, 0, 0, 0}));
  }
  SUBCASE("M4 for the small-d construction at the t5 pivot") {
    Polynomial f =
        parse_polynomial("(t1 - t3)*(t2 - t4)*(t5 - t6 + t7 - t8)", F, 8);
    RemainderClass rc = classify_remainder(f, 3, p);
    CHECK(rc.tag == RemainderTag::M4);
    REQUIRE(rc.witness_normalized.has_value());
    CHECK(*rc.witness_normalized ==
          Monomial::from_exponents({1, 1, 0, 0, 0, 2, 1, 0}));
    // in the original variables the same witness reads t1 t2 t6^2 t7
    CHECK(*rc.witness_original ==
          Monomial::from_exponents({1, 1, 0, 0, 0, 2, 1, 0}));
    // the other two pivots vanish
    CHECK(classify_remainder(f, 1, p).tag == RemainderTag::Zero);
    CHECK(classify_remainder(f, 2, p).tag == RemainderTag::Zero);
  }
}

TEST_CASE("a modest classification corpus stays within the four classes") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  SplitMix64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial f = random_cubic(rng, p);
    for (uint32_t j = 1; j <= 3; ++j) {
      RemainderClass rc = classify_remainder(f, j, p);
      CHECK(rc.tag != RemainderTag::Other);
    }
  }
}

TEST_CASE("minimum-weight form detection") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  SUBCASE("a product is recognized and its pairs recovered") {
    Polynomial f = parse_polynomial("(t1 + t4)*(t2 + t5)*(t3 + t6)", F, 8);
    auto pairs = is_min_weight_form(f, p);
    REQUIRE(pairs.has_value());
    REQUIRE(pairs->size() == 3);
    CHECK((*pairs)[0].i == 1);
    CHECK((*pairs)[0].c == 4);
    CHECK((*pairs)[0].a == F.one());
    CHECK((*pairs)[1].i == 2);
    CHECK((*pairs)[1].c == 5);
    CHECK((*pairs)[2].i == 3);
    CHECK((*pairs)[2].c == 6);
  }
  SUBCASE("non-products are rejected") {
    CHECK_FALSE(is_min_weight_form(
                    parse_polynomial("t1*t2*t3 + t4*t5*t6", F, 8), p)
                    .has_value());
    CHECK_FALSE(is_min_weight_form(build_next_to_min(p), p).has_value());
  }
  SUBCASE("outside the regime the question is undefined") {
    CodeParams large(F, 4, 3);
    CHECK_THROWS_AS(
        is_min_weight_form(parse_polynomial("t1*t2*t3", F, 4), large),
        InvalidArgument);
  }
}

TEST_CASE("round trip: the product builder's pairs are recovered") {
  SplitMix64 rng(71);
  for (auto [pp, kk] :
       std::initializer_list<std::pair<uint32_t, uint32_t>>{{2, 2}, {5, 1}}) {
    Field F(pp, kk);
    CodeParams p(F, 8, 3);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<BinomialPair> pairs = draw_pairs(rng, p);
      Polynomial f = build_min_weight(p, pairs);
      auto rec = is_min_weight_form(f, p);
      REQUIRE(rec.has_value());
      REQUIRE(rec->size() == pairs.size());
      std::sort(pairs.begin(), pairs.end(),
                [](const BinomialPair& a, const BinomialPair& b) {
                  return a.i < b.i;
                });
      for (size_t i = 0; i < pairs.size(); ++i) {
        CHECK((*rec)[i].i == pairs[i].i);
        CHECK((*rec)[i].c == pairs[i].c);
        CHECK((*rec)[i].a == pairs[i].a);
      }
    }
  }
}

TEST_CASE("building minimum-weight words") {
  Field F(2, 2);
  SUBCASE("pinned weights by evaluation") {
    // (q-2)^d (q-1)^{s-d} = 2^3 * 3^3 at (4,6,3)
    CodeParams p86(F, 6, 3);
    SplitMix64 rng(81);
    Polynomial f = build_min_weight(p86, draw_pairs(rng, p86));
    CHECK(weight(evaluate_on_torus(f, p86)).weight == 216);
    CHECK(min_distance(p86) == 216);
  }
  SUBCASE("bad pair sets are rejected") {
    CodeParams p(F, 8, 3);
    auto u = F.units();
    std::vector<BinomialPair> repeated_c = {
        {1, 4, u[0]}, {2, 4, u[1]}, {3, 6, u[0]}};
    CHECK_THROWS_AS(build_min_weight(p, repeated_c), InvalidArgument);
    std::vector<BinomialPair> repeated_i = {
        {1, 4, u[0]}, {1, 5, u[1]}, {3, 6, u[0]}};
    CHECK_THROWS_AS(build_min_weight(p, repeated_i), InvalidArgument);
    std::vector<BinomialPair> low_c = {
        {1, 2, u[0]}, {2, 5, u[1]}, {3, 6, u[0]}};
    CHECK_THROWS_AS(build_min_weight(p, low_c), InvalidArgument);
    std::vector<BinomialPair> zero_a = {
        {1, 4, F.zero()}, {2, 5, u[1]}, {3, 6, u[0]}};
    CHECK_THROWS_AS(build_min_weight(p, zero_a), InvalidArgument);
    CodeParams tight(F, 5, 3);  // 2d > s
    std::vector<BinomialPair> pairs = {
        {1, 4, u[0]}, {2, 5, u[1]}, {3, 4, u[0]}};
    CHECK_THROWS_AS(build_min_weight(tight, pairs), InvalidArgument);
  }
}

TEST_CASE("next-to-minimal constructions match their closed forms") {
  Field F(2, 2);
  SUBCASE("small-d regime") {
    CodeParams p(F, 8, 3);
    Polynomial f = build_next_to_min(p);
    CHECK(f == parse_polynomial("(t1 - t3)*(t2 - t4)*(t5 - t6 + t7 - t8)", F,
                                8));
    CHECK(weight(evaluate_on_torus(f, p)).weight == 2160);
  }
  SUBCASE("large-d regime, no trailing product at 2d - 2 = s") {
    CodeParams p(F, 8, 5);
    Polynomial g = build_next_to_min(p);
    CHECK(g.degree() == 5);
    CHECK(g.is_squarefree_homogeneous(5));
    CHECK(weight(evaluate_on_torus(g, p)).weight == 2160);
  }
  SUBCASE("large-d regime with a trailing product") {
    CodeParams p(F, 8, 6);  // 2d - 2 = 10 > 8
    Polynomial g = build_next_to_min(p);
    CHECK(g.degree() == 6);
    CHECK(g.is_squarefree_homogeneous(6));
    CHECK(weight(evaluate_on_torus(g, p)).weight == next_to_min(p));
  }
  SUBCASE("boundary regime is refused") {
    CHECK_THROWS_AS(build_next_to_min(CodeParams(F, 6, 3)), InvalidArgument);
  }
}

TEST_CASE("weight lower bound: pinned values and soundness") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  SUBCASE("products attain the minimum") {
    Polynomial f = parse_polynomial("(t1 + t4)*(t2 + t5)*(t3 + t6)", F, 8);
    CHECK(weight_lower_bound(f, p) == 1944);
  }
  SUBCASE("the small-d construction attains its bound") {
    Polynomial f = build_next_to_min(p);
    CHECK(weight_lower_bound(f, p) == 2160);
    CHECK(weight(evaluate_on_torus(f, p)).weight == 2160);
  }
  SUBCASE("two disjoint monomials") {
    Polynomial f = parse_polynomial("t1*t2*t3 + t4*t5*t6", F, 8);
    CHECK(weight_lower_bound(f, p) == 1944 + 360);  // delta + N(M2, 3)
    CHECK(weight_lower_bound(f, p) <=
          weight(evaluate_on_torus(f, p)).weight);
  }
  SUBCASE("sound on a random sample") {
    SplitMix64 rng(91);
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial f = random_cubic(rng, p);
      CHECK(weight_lower_bound(f, p) <=
            weight(evaluate_on_torus(f, p)).weight);
    }
  }
  SUBCASE("regime validation") {
    CodeParams large(F, 4, 3);
    CHECK_THROWS_AS(
        weight_lower_bound(parse_polynomial("t1*t2*t3", F, 4), large),
        InvalidArgument);
  }
}

TEST_CASE("n_formula equals subset counting on freshly built patterns") {
  for (auto [pp, kk] :
       std::initializer_list<std::pair<uint32_t, uint32_t>>{{2, 2}, {5, 1}}) {
    Field F(pp, kk);
    CodeParams p(F, 8, 3);
    const uint32_t q = F.q();
    FootprintSpec spec = p.footprint_spec();
    Monomial lmf = Monomial::from_exponents({1, 1, 1, 0, 0, 0, 0, 0});
    std::vector<Monomial> excl = {lmf};
    auto check3 = [&](MonClass cls, std::optional<uint32_t> v,
                      const Monomial& m) {
      uint64_t f = n_formula(cls, v, p);
      uint64_t c = count_multiples_excluding(m, excl, spec);
      uint64_t o = oracles::box_count(m, excl, q, 8);
      CHECK(f == c);
      CHECK(c == o);
    };
    check3(MonClass::M1, std::nullopt,
           Monomial::from_exponents({0, 1, 1, 0, 0, 0, 0, 0}));
    check3(MonClass::M2, 2u,
           Monomial::from_exponents({q - 2, 1, 0, 1, 1, 0, 0, 0}));
    check3(MonClass::M2, 3u,
           Monomial::from_exponents({q - 2, 0, 0, 1, 1, 1, 0, 0}));
    check3(MonClass::M3, 0u,
           Monomial::from_exponents({q - 2, 1, 0, 2, 0, 0, 0, 0}));
    check3(MonClass::M3, 1u,
           Monomial::from_exponents({q - 2, 0, 0, 2, 1, 0, 0, 0}));
    check3(MonClass::M4, std::nullopt,
           Monomial::from_exponents({0, 1, 1, q - 2, 1, 0, 0, 0}));
  }
}

TEST_CASE("inequality grid") {
  Field F(2, 2);
  SUBCASE("single parameter set with the pinned gap") {
    CodeParams p(F, 8, 3);
    std::vector<CodeParams> grid = {p};
    InequalityReport rep = verify_inequalities(grid);
    CHECK(rep.all_pass);
    CHECK(n_formula(MonClass::M4, std::nullopt, p) -
              n_formula(MonClass::M3, 0u, p) ==
          54);
  }
  SUBCASE("empty grid") {
    InequalityReport rep = verify_inequalities(std::vector<CodeParams>{});
    CHECK(rep.all_pass);
    CHECK(rep.entries.empty());
  }
  SUBCASE("precondition") {
    std::vector<CodeParams> bad = {CodeParams(F, 7, 3)};  // 2d+2 > s
    CHECK_THROWS_AS(verify_inequalities(bad), InvalidArgument);
  }
}

TEST_CASE("zero remainders coincide with binomial divisibility on a sample") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  SplitMix64 rng(101);
  int zeros_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = random_cubic(rng, p);
    VarPerm perm = normalizing_permutation(f, 3);
    Polynomial fn = perm.normalize(f);
    for (uint32_t j = 1; j <= 3; ++j) {
      bool zero = classify_remainder(f, j, p).tag == RemainderTag::Zero;
      bool divisible = false;
      for (uint32_t e = 4; e <= 8 && !divisible; ++e)
        for (const FieldElement& a : F.units()) {
          Polynomial img = substitute(
              fn, j,
              Polynomial::monomial(F, 8, Monomial::variable(8, e), -a));
          if (img.is_zero()) {
            divisible = true;
            break;
          }
        }
      CHECK(zero == divisible);
      if (zero) ++zeros_seen;
    }
  }
  // also exercise the divisible direction explicitly
  Polynomial f = parse_polynomial("(t1 + g^1*t6)*(t2*t3 + t2*t4)", F, 8);
  CHECK(classify_remainder(f, 1, p).tag == RemainderTag::Zero);
}

TEST_CASE("an M3 pivot with v = 0 forces another informative pivot") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  const Monomial lmf = Monomial::from_exponents({1, 1, 1, 0, 0, 0, 0, 0});
  // (q-2)^{d-2} (q-1)^{s-d-2} = 2 * 27
  const uint64_t floor = 54;
  SplitMix64 rng(111);
  int premise_hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial f = random_cubic(rng, p);
    RemainderClass rcs[3] = {classify_remainder(f, 1, p),
                             classify_remainder(f, 2, p),
                             classify_remainder(f, 3, p)};
    for (uint32_t j = 1; j <= 3; ++j) {
      const RemainderClass& rc = rcs[j - 1];
      if (rc.tag != RemainderTag::M3 || rc.v != 0) continue;
      ++premise_hits;
      bool informative = false;
      for (uint32_t jp = 1; jp <= 3; ++jp) {
        if (jp == j || rcs[jp - 1].tag == RemainderTag::Zero) continue;
        informative = true;
        std::vector<Monomial> excl = {*rc.witness_normalized, lmf};
        CHECK(count_multiples_excluding(*rcs[jp - 1].witness_normalized, excl,
                                        p.footprint_spec()) > floor);
      }
      CHECK(informative);
    }
  }
  CHECK(premise_hits > 0);
}

TEST_CASE("classify_all aggregates the per-pivot data") {
  Field F(2, 2);
  CodeParams p(F, 8, 3);
  Polynomial f = build_next_to_min(p);
  ClassificationReport rep = classify_all(f, p);
  REQUIRE(rep.per_j.size() == 3);
  CHECK(rep.per_j[0].tag == RemainderTag::Zero);
  CHECK(rep.per_j[1].tag == RemainderTag::Zero);
  CHECK(rep.per_j[2].tag == RemainderTag::M4);
  CHECK(rep.bound_contributions[0] == 0);
  CHECK(rep.bound_contributions[2] == 216);
  CHECK(rep.min_form_applicable);
  CHECK_FALSE(rep.pairs.has_value());
  REQUIRE(rep.lower_bound.has_value());
  CHECK(*rep.lower_bound == 2160);
}
