#include "hyperweight/gf.hpp"

#include <string>
#include <vector>

#include "hyperweight/util.hpp"

namespace hyperweight {

namespace {

std::vector<uint32_t> unpack(uint32_t rep, uint32_t p, uint32_t k) {
  std::vector<uint32_t> d(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    d[i] = rep % p;
    rep /= p;
  }
  return d;
}

uint32_t pack(const std::vector<uint32_t>& d, uint32_t p, uint32_t k) {
  uint32_t rep = 0;
  for (uint32_t i = k; i-- > 0;) rep = rep * p + d[i];
  return rep;
}

// Remainder of a (coefficient vector, any length) modulo monic m over GF(p).
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a,
                               const std::vector<uint32_t>& m, uint32_t p) {
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t c = a.back();
    a.pop_back();
    if (c == 0) continue;
    const size_t shift = a.size() - dm;
    for (size_t i = 0; i < dm; ++i) {
      uint32_t v = a[shift + i] + p - (c * m[i]) % p;
      a[shift + i] = v % p;
    }
  }
  return a;
}

bool is_zero_vec(const std::vector<uint32_t>& a) {
  for (uint32_t c : a)
    if (c) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  const uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  for (uint32_t dd = 1; dd <= deg / 2; ++dd) {
    const uint64_t count = checked_pow(p, dd);
    for (uint64_t m = 0; m < count; ++m) {
      std::vector<uint32_t> g = unpack(static_cast<uint32_t>(m), p, dd);
      g.push_back(1);
      std::vector<uint32_t> r = poly_mod(f, g, p);
      if (is_zero_vec(r)) return false;
    }
  }
  return true;
}

}  // namespace

void require_same_field(const Field* a, const Field* b) {
  if (!a || !b) throw InvalidArgument("use of a singular field element");
  if (a != b)
    throw InvalidArgument("mixed fields: operands belong to " + a->name() +
                          " and " + b->name());
}

Field::Field(uint32_t p, uint32_t k) : p_(p), k_(k) {
  if (k == 0) throw InvalidArgument("extension degree must be >= 1");
  if (!is_prime(p))
    throw InvalidArgument("characteristic must be prime, got " +
                          std::to_string(p));
  uint64_t q = checked_pow(p, k);
  if (q < 4 || q > 65536)
    throw InvalidArgument("field order must satisfy 4 <= p^k <= 65536, got " +
                          std::to_string(q));
  q_ = static_cast<uint32_t>(q);

  if (k_ == 1) {
    modulus_ = {0, 1};  // x
  } else {
    for (uint64_t m = 0;; ++m) {
      std::vector<uint32_t> cand = unpack(static_cast<uint32_t>(m), p_, k_);
      cand.push_back(1);
      if (is_irreducible(cand, p_)) {
        modulus_ = std::move(cand);
        break;
      }
    }
  }

  // Table-free multiplication, used only to bootstrap the tables.
  auto mul_slow = [&](uint32_t a, uint32_t b) -> uint32_t {
    if (k_ == 1) return static_cast<uint32_t>((uint64_t{a} * b) % p_);
    std::vector<uint32_t> da = unpack(a, p_, k_), db = unpack(b, p_, k_);
    std::vector<uint32_t> prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i)
      for (uint32_t j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    std::vector<uint32_t> r = poly_mod(std::move(prod), modulus_, p_);
    r.resize(k_, 0);
    return pack(r, p_, k_);
  };
  auto pow_slow = [&](uint32_t a, uint64_t e) -> uint32_t {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };

  std::vector<uint64_t> prime_factors;
  {
    uint64_t m = q_ - 1;
    for (uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_factors.push_back(m);
  }
  for (uint32_t cand = 1; cand < q_; ++cand) {
    bool ok = true;
    for (uint64_t r : prime_factors) {
      if (pow_slow(cand, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = cand;
      break;
    }
  }

  alog_.resize(q_ - 1);
  log_.assign(q_, 0);
  alog_[0] = 1;
  for (uint32_t i = 1; i < q_ - 1; ++i) alog_[i] = mul_slow(alog_[i - 1], gen_);
  for (uint32_t i = 0; i < q_ - 1; ++i) log_[alog_[i]] = i;
}

FieldElement Field::element(uint32_t rep) const {
  if (rep >= q_)
    throw InvalidArgument("element index " + std::to_string(rep) +
                          " out of range for " + name());
  return {this, rep};
}

FieldElement Field::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<uint32_t>(r)};
}

std::vector<FieldElement> Field::units() const {
  std::vector<FieldElement> u;
  u.reserve(q_ - 1);
  for (uint32_t i = 0; i < q_ - 1; ++i) u.push_back({this, alog_[i]});
  return u;
}

uint32_t Field::inv_rep(uint32_t a) const {
  if (a == 0) throw InvalidArgument("inversion of zero in " + name());
  uint32_t l = log_[a];
  return alog_[l == 0 ? 0 : q_ - 1 - l];
}

uint32_t Field::pow_rep(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e > 0) return 0;
    throw InvalidArgument("negative power of zero in " + name());
  }
  const int64_t m = q_ - 1;
  int64_t r = e % m;
  if (r < 0) r += m;
  return alog_[(uint64_t{log_[a]} * static_cast<uint64_t>(r)) % m];
}

uint32_t Field::log_of(uint32_t a) const {
  if (a == 0) throw InvalidArgument("logarithm of zero in " + name());
  return log_[a];
}

void Field::add_rows(std::span<uint16_t> dst,
                     std::span<const uint16_t> src) const {
  const size_t n = dst.size();
  if (p_ == 2) {
    for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
  } else if (k_ == 1) {
    const uint16_t p = static_cast<uint16_t>(p_);
    for (size_t i = 0; i < n; ++i) {
      uint32_t s = uint32_t{dst[i]} + src[i];
      dst[i] = static_cast<uint16_t>(s >= p ? s - p : s);
    }
  } else {
    for (size_t i = 0; i < n; ++i)
      dst[i] = static_cast<uint16_t>(add_digits(dst[i], src[i]));
  }
}

uint32_t Field::add_digits(uint32_t a, uint32_t b) const {
  uint32_t rep = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    uint32_t s = da + db;
    if (s >= p_) s -= p_;
    rep += s * mult;
    mult *= p_;
  }
  return rep;
}

uint32_t Field::neg_digits(uint32_t a) const {
  uint32_t rep = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t da = a % p_;
    a /= p_;
    rep += (da == 0 ? 0 : p_ - da) * mult;
    mult *= p_;
  }
  return rep;
}

std::string Field::element_str(uint32_t rep) const {
  if (rep >= q_)
    throw InvalidArgument("element index out of range in " + name());
  if (k_ == 1) return std::to_string(rep);
  if (rep == 0) return "0";
  if (rep == 1) return "1";
  return "g^" + std::to_string(log_[rep]);
}

}  // namespace hyperweight
