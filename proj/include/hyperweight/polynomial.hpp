#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperweight/gf.hpp"
#include "hyperweight/monomial.hpp"

namespace hyperweight {

// Sparse polynomial over a fixed field in t1..ts. Terms are held in strictly
// descending grlex order and never carry a zero coefficient, so leading_term
// is O(1) and the textual form is canonical. Values are immutable in spirit:
// every operation returns a fresh polynomial.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    FieldElement coeff;
  };

  Polynomial(const Field& f, uint32_t arity) : field_(&f), arity_(arity) {}

  static Polynomial constant(const Field& f, uint32_t arity, FieldElement c);
  static Polynomial from_int(const Field& f, uint32_t arity, int64_t n);
  static Polynomial variable(const Field& f, uint32_t arity, uint32_t var);
  static Polynomial monomial(const Field& f, uint32_t arity, Monomial m,
                             FieldElement c);
  static Polynomial from_terms(const Field& f, uint32_t arity,
                               std::vector<Term> terms);

  const Field& field() const { return *field_; }
  uint32_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;  // throws on the zero polynomial
  const Monomial& leading_monomial() const { return leading_term().mono; }
  FieldElement leading_coefficient() const { return leading_term().coeff; }
  uint64_t degree() const { return leading_term().mono.degree(); }
  bool is_monic() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(FieldElement c) const;
  // this * (c * m); preserves term order, the workhorse of division.
  Polynomial mul_term(FieldElement c, const Monomial& m) const;
  Polynomial without_leading_term() const;
  Polynomial monic() const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  // True iff f != 0, every monomial has all exponents <= 1, and every
  // monomial has total degree exactly d.
  bool is_squarefree_homogeneous(uint64_t d) const;

  std::string str() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  const Field* field_;
  uint32_t arity_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, uint32_t e);

// f with t_var replaced by g (any polynomial of the same ambient).
Polynomial substitute(const Polynomial& f, uint32_t var, const Polynomial& g);

// t_var^{q-1} - 1, a generator of the vanishing ideal of the torus.
Polynomial field_equation(const Field& f, uint32_t arity, uint32_t var);

void require_same_ambient(const Polynomial& a, const Polynomial& b);

}  // namespace hyperweight
