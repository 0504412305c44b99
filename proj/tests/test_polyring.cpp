#include <vector>

#include "doctest.h"
#include "hyperweight/parser.hpp"
#include "hyperweight/polynomial.hpp"
#include "hyperweight/util.hpp"

using namespace hyperweight;

namespace {

Monomial mono(std::vector<uint32_t> exps) {
  return Monomial::from_exponents(std::move(exps));
}

Monomial random_monomial(SplitMix64& rng, uint32_t s, uint32_t max_e) {
  std::vector<uint32_t> e(s);
  for (uint32_t& x : e) x = static_cast<uint32_t>(rng.below(max_e + 1));
  return Monomial::from_exponents(std::move(e));
}

Polynomial random_poly(SplitMix64& rng, const Field& F, uint32_t s,
                       uint32_t terms, uint32_t max_e) {
  std::vector<Polynomial::Term> ts;
  for (uint32_t i = 0; i < terms; ++i)
    ts.push_back({random_monomial(rng, s, max_e),
                  F.element(static_cast<uint32_t>(rng.below(F.q())))});
  return Polynomial::from_terms(F, s, std::move(ts));
}

}  // namespace

TEST_CASE("grlex order: ties broken at the first differing index") {
  // s=3: t1 t2 > t2 t3
  CHECK(grlex_greater(mono({1, 1, 0}), mono({0, 1, 1})));
  // s=8, both degree 5: t1 t2 t6^2 t7 > t1 t4 t5^2 t6
  CHECK(grlex_greater(mono({1, 1, 0, 0, 0, 2, 1, 0}),
                      mono({1, 0, 0, 1, 2, 1, 0, 0})));
  // degree dominates
  CHECK(grlex_greater(mono({1, 0, 0}), mono({0, 0, 0})));
  CHECK(grlex_compare(mono({1, 2, 0}), mono({1, 2, 0})) ==
        std::strong_ordering::equal);
  CHECK_THROWS_AS(grlex_compare(mono({1}), mono({1, 0})), InvalidArgument);
}

TEST_CASE("grlex is a total order compatible with multiplication") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a = random_monomial(rng, 5, 4);
    Monomial b = random_monomial(rng, 5, 4);
    Monomial c = random_monomial(rng, 5, 4);
    auto ab = grlex_compare(a, b);
    auto ba = grlex_compare(b, a);
    // antisymmetry
    CHECK(ab == 0 ? ba == 0 : (ab < 0) != (ba < 0));
    // multiplicativity
    CHECK(grlex_compare(a * c, b * c) == ab);
    // transitivity
    auto bc = grlex_compare(b, c);
    if (ab < 0 && bc < 0) CHECK(grlex_compare(a, c) < 0);
  }
}

TEST_CASE("leading terms") {
  Field F(2, 2);
  Polynomial f = parse_polynomial("t1*t2*t3 + t2*t3*t4", F, 4);
  CHECK(f.leading_monomial() == mono({1, 1, 1, 0}));
  CHECK(f.leading_coefficient() == F.one());
  CHECK_THROWS_AS(Polynomial(F, 4).leading_term(), InvalidArgument);

  Polynomial g =
      parse_polynomial("(t1 - t3)*(t2 - t4)*(t5 - t6 + t7 - t8)", F, 8);
  CHECK(g.leading_monomial() == mono({1, 1, 0, 0, 1, 0, 0, 0}));
}

TEST_CASE("lm(fg) = lm(f) lm(g) on random nonzero polynomials") {
  Field F(5, 1);
  SplitMix64 rng(11);
  int done = 0;
  while (done < 200) {
    Polynomial f = random_poly(rng, F, 4, 4, 3);
    Polynomial g = random_poly(rng, F, 4, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).leading_monomial() ==
          f.leading_monomial() * g.leading_monomial());
    ++done;
  }
}

TEST_CASE("ring arithmetic basics") {
  Field F(2, 2);
  Polynomial t1 = Polynomial::variable(F, 2, 1);
  Polynomial t2 = Polynomial::variable(F, 2, 2);
  CHECK((t1 + t2) + (-t2) == t1);
  // char 2 Frobenius
  Polynomial sum = t1 + t2;
  CHECK(sum * sum == parse_polynomial("t1^2 + t2^2", F, 2));
  // distributivity with unit coefficients
  Field F5(5, 1);
  Polynomial lhs = parse_polynomial("(t1 + 2*t4)*(t2 + 3*t5)", F5, 5);
  Polynomial rhs =
      parse_polynomial("t1*t2 + 3*t1*t5 + 2*t2*t4 + 6*t4*t5", F5, 5);
  CHECK(lhs == rhs);
}

TEST_CASE("addition and multiplication agree with evaluation") {
  Field F(3, 2);
  SplitMix64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f = random_poly(rng, F, 3, 4, 2);
    Polynomial g = random_poly(rng, F, 3, 4, 2);
    std::vector<FieldElement> pt;
    for (int i = 0; i < 3; ++i)
      pt.push_back(F.element(static_cast<uint32_t>(rng.below(F.q()))));
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
  }
}

TEST_CASE("evaluation examples") {
  Field F(2, 2);
  Polynomial f = parse_polynomial("t1 - t2", F, 2);
  std::vector<FieldElement> same = {F.generator(), F.generator()};
  CHECK(f.evaluate(same).is_zero());

  Polynomial m = parse_polynomial("t1*t2*t3", F, 3);
  std::vector<FieldElement> pt = {F.generator(), F.one(),
                                  F.generator().pow(2)};
  CHECK_FALSE(m.evaluate(pt).is_zero());

  Polynomial alt = parse_polynomial("t5 - t6 + t7 - t8", F, 8);
  std::vector<FieldElement> ones(8, F.one());
  CHECK(alt.evaluate(ones).is_zero());

  CHECK_THROWS_AS(m.evaluate(ones), InvalidArgument);
}

TEST_CASE("parser expands products into canonical form") {
  Field F(2, 2);
  Polynomial f =
      parse_polynomial("(t1 - t3)*(t2 - t4)*(t5 - t6 + t7 - t8)", F, 8);
  CHECK(f.term_count() == 16);
  CHECK(f.is_squarefree_homogeneous(3));
  CHECK(f.is_monic());

  CHECK(parse_polynomial("t1*t2*t3", F, 3).term_count() == 1);
  Polynomial b = parse_polynomial("t1^3 - 1", F, 3);
  CHECK(b.term_count() == 2);
  CHECK(b.degree() == 3);
}

TEST_CASE("parser reports positions and bad input") {
  Field F(2, 2);
  CHECK_THROWS_WITH_AS(parse_polynomial("t1 + t9", F, 8),
                       doctest::Contains("position"), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("t0 + t1", F, 8), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("t1 * ", F, 8), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("(t1 + t2", F, 8), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("t1 t2", F, 8), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("", F, 8), InvalidArgument);
}

TEST_CASE("parse of canonical output is the identity") {
  const std::pair<uint32_t, uint32_t> shapes[] = {{2, 2}, {5, 1}};
  SplitMix64 rng(17);
  for (auto [p, k] : shapes) {
    Field F(p, k);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial f = random_poly(rng, F, 4, 5, 3);
      CHECK(parse_polynomial(f.str(), F, 4) == f);
    }
    CHECK(parse_polynomial("0", F, 4) == Polynomial(F, 4));
  }
}

TEST_CASE("square-free homogeneous predicate") {
  Field F(2, 2);
  CHECK(parse_polynomial("t1*t2*t3 + t4*t5*t6", F, 6)
            .is_squarefree_homogeneous(3));
  CHECK_FALSE(parse_polynomial("t1^2*t2", F, 3).is_squarefree_homogeneous(3));
  CHECK_FALSE(parse_polynomial("t1*t2*t3 + t4*t5", F, 6)
                  .is_squarefree_homogeneous(3));
  CHECK_FALSE(Polynomial(F, 3).is_squarefree_homogeneous(3));
}

TEST_CASE("substitution replaces a variable") {
  Field F(2, 2);
  // t1 -> g*t3 in t1*t2 + t2*t3
  Polynomial f = parse_polynomial("t1*t2 + t2*t3", F, 3);
  Polynomial g = Polynomial::monomial(F, 3, Monomial::variable(3, 3),
                                      F.generator());
  Polynomial expect = parse_polynomial("g^1*t2*t3 + t2*t3", F, 3);
  CHECK(substitute(f, 1, g) == expect);
  // divisibility by t1 + a*t3 via substitution t1 -> -a*t3
  Polynomial h = parse_polynomial("(t1 + g^1*t3)*(t2 + t4)", F, 4);
  Polynomial img = substitute(
      h, 1,
      Polynomial::monomial(F, 4, Monomial::variable(4, 3), -F.generator()));
  CHECK(img.is_zero());
}

TEST_CASE("field equations have the expected shape") {
  Field F(2, 2);
  Polynomial e = field_equation(F, 3, 2);
  CHECK(e.term_count() == 2);
  CHECK(e.leading_monomial() == mono({0, 3, 0}));
  CHECK(e.degree() == 3);
}

TEST_CASE("monomial text") {
  CHECK(mono({1, 0, 2}).str() == "t1*t3^2");
  CHECK(mono({0, 0, 0}).str() == "1");
}
