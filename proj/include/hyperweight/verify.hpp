#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperweight {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // failure description, or brief stats on pass
  double millis = 0.0;
};

// The full verification suite: closed-form weights against brute-force
// evaluation, exhaustive spectra, counting formulas against subset counts and
// box enumeration, the inequality grid, the seeded remainder-classification
// corpus, bound soundness, footprint cross-checks, and gap sampling.
// Deterministic for a fixed seed.
std::vector<CheckResult> run_verification_suite(uint64_t seed);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace hyperweight
