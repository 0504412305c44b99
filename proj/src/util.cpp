#include "hyperweight/util.hpp"

#include <string>

#include "hyperweight/errors.hpp"

namespace hyperweight {

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceLimit("64-bit count overflow in addition");
  return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceLimit("64-bit count overflow in multiplication");
  return r;
}

uint64_t checked_pow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<uint32_t, uint32_t>> factor_prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {{static_cast<uint32_t>(q), 1}};  // q itself prime
  uint32_t k = 0;
  uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return {{static_cast<uint32_t>(p), k}};
}

uint64_t binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (uint32_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace hyperweight
