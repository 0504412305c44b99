#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hyperweight {

// Exponent vector in the variables t1..ts. Variable indices are 1-based
// throughout the library; t1 is the heaviest variable in the monomial order.
class Monomial {
 public:
  explicit Monomial(uint32_t arity) : exps_(arity, 0), degree_(0) {}

  static Monomial from_exponents(std::vector<uint32_t> exps);
  static Monomial variable(uint32_t arity, uint32_t var, uint32_t e = 1);

  uint32_t arity() const { return static_cast<uint32_t>(exps_.size()); }
  uint32_t exp(uint32_t var) const;  // var in 1..s
  std::span<const uint32_t> exponents() const { return exps_; }
  uint64_t degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }
  bool is_squarefree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& m) const;         // this | m
  Monomial divided_by(const Monomial& d) const;  // pre: d | this
  Monomial with_exp(uint32_t var, uint32_t e) const;

  std::string str() const;  // "t1*t3^2"; the constant monomial prints "1"

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<uint32_t> exps_;
  uint64_t degree_;
};

// Graded lexicographic order with t1 heaviest: larger total degree wins; on
// ties the first index (scanning from t1) where the exponents differ decides,
// larger exponent greater.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);
bool grlex_less(const Monomial& a, const Monomial& b);
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_greater(a, b);
  }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

}  // namespace hyperweight
