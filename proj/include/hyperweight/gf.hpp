#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperweight/errors.hpp"

namespace hyperweight {

class Field;

// Element of a fixed GF(p^k), identified by its canonical index ("rep"):
// 0 is zero; for k = 1 the rep is the residue itself; for k > 1 it packs the
// coefficients of the polynomial representative in base p, constant digit
// lowest. Elements carry a pointer to their field, so mixing fields in
// arithmetic is caught.
class FieldElement {
 public:
  FieldElement() = default;  // singular until assigned from a Field

  uint32_t rep() const { return rep_; }
  const Field& field() const;
  bool is_zero() const { return rep_ == 0; }
  bool is_singular() const { return field_ == nullptr; }

  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(int64_t e) const;

  bool operator==(FieldElement o) const {
    return field_ == o.field_ && rep_ == o.rep_;
  }
  bool operator!=(FieldElement o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend class Field;
  FieldElement(const Field* f, uint32_t rep) : field_(f), rep_(rep) {}

  const Field* field_ = nullptr;
  uint32_t rep_ = 0;
};

// GF(p^k) with 4 <= p^k <= 2^16. The modulus is the first irreducible monic
// degree-k polynomial over GF(p), scanning the non-leading coefficients as an
// increasing base-p integer (constant digit least significant); the generator
// is the element of smallest rep with multiplicative order exactly q-1. Both
// scans are deterministic, so a (p, k) pair always produces the same tables.
//
// Multiplication, inversion and powers run on log/antilog tables built at
// construction. The object is immutable afterwards and safe to share across
// threads; it is non-copyable because elements and polynomials keep stable
// pointers to it.
class Field {
 public:
  Field(uint32_t p, uint32_t k);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  // Coefficients c0..ck of the modulus, monic (ck = 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement generator() const { return {this, gen_}; }
  FieldElement element(uint32_t rep) const;
  // Image of an integer under Z -> GF(p) -> GF(p^k).
  FieldElement from_int(int64_t n) const;

  // The q-1 units in the canonical order g^0, g^1, ..., g^{q-2}.
  std::vector<FieldElement> units() const;

  // Index-level arithmetic (used by the dense codeword paths).
  uint32_t add_rep(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }
  uint32_t neg_rep(uint32_t a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  uint32_t sub_rep(uint32_t a, uint32_t b) const {
    return add_rep(a, neg_rep(b));
  }
  uint32_t mul_rep(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t l = log_[a] + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return alog_[l];
  }
  uint32_t inv_rep(uint32_t a) const;
  uint32_t pow_rep(uint32_t a, int64_t e) const;
  uint32_t log_of(uint32_t a) const;  // a != 0
  uint32_t alog_of(uint64_t i) const { return alog_[i % (q_ - 1)]; }

  // dst[i] <- dst[i] + src[i]; the loop is specialized per field shape so the
  // char-2 case compiles to a plain xor loop.
  void add_rows(std::span<uint16_t> dst, std::span<const uint16_t> src) const;

  // Canonical text: residues for prime fields; "0", "1", "g^k" otherwise.
  std::string element_str(uint32_t rep) const;

 private:
  uint32_t add_digits(uint32_t a, uint32_t b) const;
  uint32_t neg_digits(uint32_t a) const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  uint32_t gen_ = 0;
  std::vector<uint32_t> log_, alog_;
};

void require_same_field(const Field* a, const Field* b);

inline const Field& FieldElement::field() const {
  if (!field_) throw InvalidArgument("use of a singular field element");
  return *field_;
}

inline FieldElement FieldElement::operator+(FieldElement o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add_rep(rep_, o.rep_)};
}

inline FieldElement FieldElement::operator-(FieldElement o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub_rep(rep_, o.rep_)};
}

inline FieldElement FieldElement::operator*(FieldElement o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul_rep(rep_, o.rep_)};
}

inline FieldElement FieldElement::operator-() const {
  return {&field(), field_->neg_rep(rep_)};
}

inline FieldElement FieldElement::inv() const {
  return {&field(), field_->inv_rep(rep_)};
}

inline FieldElement FieldElement::pow(int64_t e) const {
  return {&field(), field_->pow_rep(rep_, e)};
}

inline std::string FieldElement::str() const {
  return field().element_str(rep_);
}

}  // namespace hyperweight
