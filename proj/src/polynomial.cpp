#include "hyperweight/polynomial.hpp"

#include <algorithm>

namespace hyperweight {

void require_same_ambient(const Polynomial& a, const Polynomial& b) {
  require_same_field(&a.field(), &b.field());
  if (a.arity() != b.arity())
    throw InvalidArgument("polynomial arity mismatch: " +
                          std::to_string(a.arity()) + " vs " +
                          std::to_string(b.arity()));
}

Polynomial Polynomial::constant(const Field& f, uint32_t arity,
                                FieldElement c) {
  Polynomial r(f, arity);
  if (!c.is_zero()) {
    require_same_field(&f, &c.field());
    r.terms_.push_back({Monomial(arity), c});
  }
  return r;
}

Polynomial Polynomial::from_int(const Field& f, uint32_t arity, int64_t n) {
  return constant(f, arity, f.from_int(n));
}

Polynomial Polynomial::variable(const Field& f, uint32_t arity, uint32_t var) {
  return monomial(f, arity, Monomial::variable(arity, var), f.one());
}

Polynomial Polynomial::monomial(const Field& f, uint32_t arity, Monomial m,
                                FieldElement c) {
  if (m.arity() != arity)
    throw InvalidArgument("monomial arity does not match polynomial arity");
  Polynomial r(f, arity);
  if (!c.is_zero()) {
    require_same_field(&f, &c.field());
    r.terms_.push_back({std::move(m), c});
  }
  return r;
}

Polynomial Polynomial::from_terms(const Field& f, uint32_t arity,
                                  std::vector<Term> terms) {
  for (const Term& t : terms) {
    require_same_field(&f, &t.coeff.field());
    if (t.mono.arity() != arity)
      throw InvalidArgument("term arity does not match polynomial arity");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_greater(a.mono, b.mono);
  });
  Polynomial r(f, arity);
  for (Term& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = r.terms_.back().coeff + t.coeff;
      if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw InvalidArgument("the zero polynomial has no leading term");
  return terms_.front();
}

bool Polynomial::is_monic() const {
  return !is_zero() && leading_coefficient() == field_->one();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ambient(*this, o);
  Polynomial r(*field_, arity_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = grlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement sum = terms_[i].coeff + o.terms_[j].coeff;
      if (!sum.is_zero()) r.terms_.push_back({terms_[i].mono, sum});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*field_, arity_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ambient(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(*field_, arity_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(*field_, arity_, std::move(prod));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  require_same_field(field_, &c.field());
  Polynomial r(*field_, arity_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::mul_term(FieldElement c, const Monomial& m) const {
  require_same_field(field_, &c.field());
  if (m.arity() != arity_) throw InvalidArgument("monomial arity mismatch");
  Polynomial r(*field_, arity_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // grlex is compatible with multiplication, so the order is preserved
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::without_leading_term() const {
  if (terms_.empty())
    throw InvalidArgument("the zero polynomial has no leading term");
  Polynomial r(*field_, arity_);
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InvalidArgument("cannot normalize the zero polynomial");
  if (is_monic()) return *this;
  return scaled(leading_coefficient().inv());
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != arity_)
    throw InvalidArgument("evaluation point has arity " +
                          std::to_string(point.size()) + ", expected " +
                          std::to_string(arity_));
  for (const FieldElement& x : point) require_same_field(field_, &x.field());
  uint32_t acc = 0;
  for (const Term& t : terms_) {
    uint32_t v = t.coeff.rep();
    auto exps = t.mono.exponents();
    for (uint32_t i = 0; i < arity_ && v; ++i)
      if (exps[i])
        v = field_->mul_rep(v, field_->pow_rep(point[i].rep(), exps[i]));
    acc = field_->add_rep(acc, v);
  }
  return field_->element(acc);
}

bool Polynomial::is_squarefree_homogeneous(uint64_t d) const {
  if (is_zero()) return false;
  for (const Term& t : terms_)
    if (!t.mono.is_squarefree() || t.mono.degree() != d) return false;
  return true;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    const bool unit_coeff = t.coeff == field_->one();
    if (t.mono.is_constant()) {
      out += t.coeff.str();
    } else if (unit_coeff) {
      out += t.mono.str();
    } else {
      out += t.coeff.str() + "*" + t.mono.str();
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (field_ != o.field_ || arity_ != o.arity_ ||
      terms_.size() != o.terms_.size())
    return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial pow(const Polynomial& f, uint32_t e) {
  Polynomial r = Polynomial::constant(f.field(), f.arity(), f.field().one());
  for (uint32_t i = 0; i < e; ++i) r = r * f;
  return r;
}

Polynomial substitute(const Polynomial& f, uint32_t var, const Polynomial& g) {
  require_same_ambient(f, g);
  if (var < 1 || var > f.arity())
    throw InvalidArgument("substitution variable out of range");
  uint32_t max_e = 0;
  for (const auto& t : f.terms()) max_e = std::max(max_e, t.mono.exp(var));
  std::vector<Polynomial> powers;
  powers.reserve(max_e + 1);
  powers.push_back(Polynomial::constant(f.field(), f.arity(), f.field().one()));
  for (uint32_t e = 1; e <= max_e; ++e) powers.push_back(powers.back() * g);
  Polynomial r(f.field(), f.arity());
  for (const auto& t : f.terms()) {
    uint32_t e = t.mono.exp(var);
    r = r + powers[e].mul_term(t.coeff, t.mono.with_exp(var, 0));
  }
  return r;
}

Polynomial field_equation(const Field& f, uint32_t arity, uint32_t var) {
  std::vector<Polynomial::Term> terms;
  terms.push_back({Monomial::variable(arity, var, f.q() - 1), f.one()});
  terms.push_back({Monomial(arity), -f.one()});
  return Polynomial::from_terms(f, arity, std::move(terms));
}

}  // namespace hyperweight
