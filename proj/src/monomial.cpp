#include "hyperweight/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "hyperweight/errors.hpp"

namespace hyperweight {

namespace {
void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw InvalidArgument("monomial arity mismatch: " +
                          std::to_string(a.arity()) + " vs " +
                          std::to_string(b.arity()));
}
}  // namespace

Monomial Monomial::from_exponents(std::vector<uint32_t> exps) {
  Monomial m(static_cast<uint32_t>(exps.size()));
  m.exps_ = std::move(exps);
  m.degree_ = std::accumulate(m.exps_.begin(), m.exps_.end(), uint64_t{0});
  return m;
}

Monomial Monomial::variable(uint32_t arity, uint32_t var, uint32_t e) {
  if (var < 1 || var > arity)
    throw InvalidArgument("variable index " + std::to_string(var) +
                          " out of range 1.." + std::to_string(arity));
  Monomial m(arity);
  m.exps_[var - 1] = e;
  m.degree_ = e;
  return m;
}

uint32_t Monomial::exp(uint32_t var) const {
  if (var < 1 || var > arity())
    throw InvalidArgument("variable index " + std::to_string(var) +
                          " out of range 1.." + std::to_string(arity()));
  return exps_[var - 1];
}

bool Monomial::is_squarefree() const {
  for (uint32_t e : exps_)
    if (e > 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  require_same_arity(*this, o);
  Monomial r(arity());
  for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  require_same_arity(*this, m);
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  require_same_arity(*this, d);
  Monomial r(arity());
  uint64_t deg = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (d.exps_[i] > exps_[i])
      throw InvalidArgument("monomial division " + str() + " / " + d.str() +
                            " is not exact");
    r.exps_[i] = exps_[i] - d.exps_[i];
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

Monomial Monomial::with_exp(uint32_t var, uint32_t e) const {
  if (var < 1 || var > arity())
    throw InvalidArgument("variable index out of range");
  Monomial r = *this;
  r.degree_ = r.degree_ - r.exps_[var - 1] + e;
  r.exps_[var - 1] = e;
  return r;
}

std::string Monomial::str() const {
  std::string out;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto ea = a.exponents(), eb = b.exponents();
  for (size_t i = 0; i < ea.size(); ++i)
    if (auto c = ea[i] <=> eb[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  return grlex_compare(a, b) < 0;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  return grlex_compare(a, b) > 0;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<uint32_t> e(a.arity());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial::from_exponents(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<uint32_t> e(a.arity());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial::from_exponents(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (size_t i = 0; i < a.arity(); ++i)
    if (a.exponents()[i] && b.exponents()[i]) return false;
  return true;
}

}  // namespace hyperweight
