#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hyperweight/gf.hpp"
#include "hyperweight/groebner.hpp"
#include "hyperweight/monomial.hpp"
#include "hyperweight/polynomial.hpp"

namespace hyperweight {

inline constexpr uint64_t kDefaultMaxCells = 100'000'000;
inline constexpr uint64_t kDefaultMaxCodewords = 10'000'000;

// The code parameters (q, s, d): evaluation over the torus (F_q^*)^s of the
// span of the square-free degree-d monomials. Length (q-1)^s, dimension
// binom(s, d). small_d / large_d are the two regimes with a closed-form
// next-to-minimal weight; everything in between is the boundary regime.
class CodeParams {
 public:
  CodeParams(const Field& f, uint32_t s, uint32_t d);

  const Field& field() const { return *field_; }
  uint32_t q() const { return field_->q(); }
  uint32_t s() const { return s_; }
  uint32_t d() const { return d_; }
  uint64_t length() const;     // (q-1)^s
  uint64_t dimension() const;  // binom(s, d)
  bool small_d() const { return 2 * d_ + 2 <= s_; }
  bool large_d() const { return 2 * d_ >= s_ + 2; }
  bool boundary() const { return !small_d() && !large_d(); }
  FootprintSpec footprint_spec() const { return {q(), s_}; }

 private:
  const Field* field_;
  uint32_t s_, d_;
};

struct Codeword {
  const Field* field = nullptr;
  std::vector<uint16_t> reps;

  size_t length() const { return reps.size(); }
  FieldElement at(size_t i) const { return field->element(reps[i]); }
};

struct WeightReport {
  uint64_t weight = 0;
  uint64_t zeros = 0;
  uint64_t length = 0;
};

WeightReport weight(const Codeword& w);

// Torus points in the fixed mixed-radix order: point index i has base-(q-1)
// digits selecting units()[digit] per coordinate, coordinate 1 most
// significant, so index 0 is (1, ..., 1).
uint64_t torus_size(const CodeParams& p);
std::vector<FieldElement> torus_point(const CodeParams& p, uint64_t index);
std::vector<std::vector<FieldElement>> torus_points(
    const CodeParams& p, uint64_t max_cells = kDefaultMaxCells);

// All binom(s, d) square-free degree-d monomials, descending in grlex.
std::vector<Monomial> hypersimplex_monomials(const CodeParams& p);

Codeword evaluate_on_torus(const Polynomial& f, const CodeParams& p,
                           uint64_t max_cells = kDefaultMaxCells);

// Dense evaluations of the monomial basis over the torus, with per-scalar
// scaled copies, so repeated encodings reduce to row additions.
class Encoder {
 public:
  explicit Encoder(const CodeParams& p, uint64_t max_cells = kDefaultMaxCells);

  const CodeParams& params() const { return params_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  uint64_t length() const { return n_; }
  uint64_t dimension() const { return basis_.size(); }

  Codeword encode(std::span<const FieldElement> coeffs) const;
  // Hot path: coefficient reps in basis order; scratch is reused by callers.
  void encode_reps(std::span<const uint32_t> coeff_reps,
                   std::vector<uint16_t>& out) const;
  uint64_t weight_of(std::span<const uint32_t> coeff_reps,
                     std::vector<uint16_t>& scratch) const;

 private:
  const std::vector<uint16_t>& scaled_row(size_t mono_idx, uint32_t c) const;

  CodeParams params_;
  std::vector<Monomial> basis_;
  uint64_t n_ = 0;
  std::vector<std::vector<uint16_t>> scaled_;  // [mono * (q-1) + (c-1)]
};

Codeword encode(std::span<const FieldElement> coeffs, const CodeParams& p);

struct SpectrumReport {
  std::map<uint64_t, uint64_t> counts;  // weight -> multiplicity
  uint64_t codewords = 0;
  uint64_t min_nonzero = 0;
  std::optional<uint64_t> second_nonzero;
};

struct SpectrumGates {
  uint64_t max_codewords = kDefaultMaxCodewords;
  uint64_t max_work = kDefaultMaxCells;  // codewords * length
};

// Weight distribution over ALL q^dim codewords (zero word included).
SpectrumReport exhaustive_spectrum(const CodeParams& p,
                                   const SpectrumGates& gates = {});

// Weights of `count` seeded pseudorandom codewords: coefficients are
// SplitMix64 draws mapped to field indices by modulo q. Deterministic.
std::map<uint64_t, uint64_t> sample_weights(const CodeParams& p, uint64_t seed,
                                            uint64_t count);

// Coefficient vector of f in the hypersimplex monomial basis, or nothing if
// f is not a combination of square-free degree-d monomials.
std::optional<std::vector<FieldElement>> coords_in_basis(const Polynomial& f,
                                                         const CodeParams& p);

// |{P on the torus : f(P) = 0}| computed through a full Groebner basis of
// the torus ideal plus (f). Desk-scale gate: s <= 4.
uint64_t zeros_via_footprint(const Polynomial& f, const CodeParams& p);

// One entry per line, canonical element text.
void write_codeword_csv(std::ostream& os, const Codeword& w);
// binom(s,d) x (q-1)^s matrix, row-major, comma-separated canonical text;
// rows follow hypersimplex_monomials order, columns the torus point order.
void write_generator_matrix_csv(std::ostream& os, const CodeParams& p,
                                uint64_t max_cells = kDefaultMaxCells);

}  // namespace hyperweight
