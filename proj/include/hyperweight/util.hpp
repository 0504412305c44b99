#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace hyperweight {

// Overflow-checked unsigned arithmetic. Throws ResourceLimit on overflow.
uint64_t checked_add(uint64_t a, uint64_t b);
uint64_t checked_mul(uint64_t a, uint64_t b);
uint64_t checked_pow(uint64_t base, uint64_t exp);

bool is_prime(uint64_t n);

// Writes q as p^k with p prime and k >= 1, or nothing if q is not a prime
// power (or q < 2).
std::optional<std::pair<uint32_t, uint32_t>> factor_prime_power(uint64_t q);

uint64_t binomial(uint32_t n, uint32_t k);

// SplitMix64. The sampling generator is pinned to this exact recurrence so
// that seeded runs reproduce across platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Draw in [0, bound), bound > 0. Modulo bias is acceptable at these sizes.
  uint64_t below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

}  // namespace hyperweight
