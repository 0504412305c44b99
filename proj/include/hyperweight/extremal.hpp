#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperweight/code.hpp"
#include "hyperweight/polynomial.hpp"

namespace hyperweight {

// Minimum distance of the code: (q-2)^d (q-1)^{s-d} for 3 <= d <= s/2,
// (q-2)^{s-d} (q-1)^d for s/2 < d < s.
uint64_t min_distance(const CodeParams& p);

// Second-smallest nonzero weight. Closed form in the small-d regime
// (2d+2 <= s) and the large-d regime (2d-2 >= s); throws InvalidArgument in
// the boundary regime s in {2d-1, 2d, 2d+1}, where no proven value exists.
uint64_t next_to_min(const CodeParams& p);

struct ExperimentalValue {
  uint64_t value;
  std::string note;  // provenance marker, always "unproven"
};

// Conjectural next-to-minimal values for s = 2d +- 1 and q >= 5. Exposed for
// inspection only; nothing in the test suite asserts these numbers.
std::optional<ExperimentalValue> experimental_next_to_min(const CodeParams& p);

// The four families of leading monomials a nonzero division remainder of
// S(t_j^{q-1}-1, f) can have, in normalized coordinates (lm(f) = t1..td):
//   M1: t1..^tj..td
//   M2: tj^{q-2} * (u vars from t1..td minus tj) * (v vars past td), v >= 2
//   M3: tj^{q-2} * te^2 * (u low vars) * (v high vars), e past td
//   M4: t1..^tj..td * te1^{q-2} * te2, e1 != e2 past td
enum class RemainderTag { Zero, M1, M2, M3, M4, Other };
std::string_view to_string(RemainderTag t);

enum class MonClass { M1, M2, M3, M4 };

// Number of box monomials that are multiples of a class representative and
// not multiples of t1..td; the closed forms behind the weight bounds. v is
// required for M2 (2..d) and M3 (0..d-2) and must be absent otherwise.
uint64_t n_formula(MonClass c, std::optional<uint32_t> v, const CodeParams& p);

// Variable relabeling sending the support of lm(f) to {1..d} and the
// complement to {d+1..s}, preserving relative index order on both sides.
class VarPerm {
 public:
  static VarPerm identity(uint32_t s);

  uint32_t s() const { return static_cast<uint32_t>(fwd_.size()) - 1; }
  uint32_t to_normalized(uint32_t var) const { return fwd_.at(var); }
  uint32_t to_original(uint32_t var) const { return inv_.at(var); }
  bool is_identity() const;

  Monomial normalize(const Monomial& m) const;
  Monomial denormalize(const Monomial& m) const;
  Polynomial normalize(const Polynomial& f) const;
  Polynomial denormalize(const Polynomial& f) const;

 private:
  friend VarPerm normalizing_permutation(const Polynomial&, uint32_t);
  VarPerm() = default;
  std::vector<uint32_t> fwd_, inv_;  // 1-based; index 0 unused
};

VarPerm normalizing_permutation(const Polynomial& f, uint32_t d);

// f in normalized coordinates splits, for a pivot j in 1..d, as
//   t1..td + tj*hd1 + t1..^tj..td*h1 + hd
// where no monomial of hd1 or hd is divisible by tj or contains all of
// {t1..td} minus tj, and h1 is linear in t_{d+1}..t_s.
struct Decomposition {
  uint32_t j;
  Polynomial h1, hd1, hd;  // normalized coordinates
  VarPerm perm;
  Polynomial normalized_f;
};

Decomposition decompose(const Polynomial& f, uint32_t j, uint32_t d);

// Remainder of S(t_j^{q-1}-1, f) divided by the fixed list
// [t_1^{q-1}-1, ..., t_s^{q-1}-1, f], all in normalized coordinates.
Polynomial remainder_for_j(const Polynomial& f, uint32_t j,
                           const CodeParams& p);

struct RemainderClass {
  RemainderTag tag = RemainderTag::Other;
  int u = -1, v = -1;  // M2/M3 split parameters
  int e = -1;          // doubled-variable index, M3 only
  std::optional<Monomial> witness_normalized;  // absent iff Zero
  std::optional<Monomial> witness_original;
};

// Classifies the leading monomial of remainder_for_j against the patterns
// above. Anything that fits no pattern reports Other; it is never coerced.
RemainderClass classify_remainder(const Polynomial& f, uint32_t j,
                                  const CodeParams& p);

// One factor t_i + a * t_c of a minimum-weight product.
struct BinomialPair {
  uint32_t i;      // in 1..d
  uint32_t c;      // in d+1..s
  FieldElement a;  // a unit
};

// When every pivot's remainder vanishes, f (normalized) factors as
// (t_1 + a_1 t_{c_1})...(t_d + a_d t_{c_d}); returns those pairs in
// normalized coordinates, or nothing when f is not of minimum weight.
// Defined only in the regime 2d <= s.
std::optional<std::vector<BinomialPair>> is_min_weight_form(
    const Polynomial& f, const CodeParams& p);

// Expanded product of the given factors; rejects pair sets whose product is
// not square-free (repeated c indices). Evaluated weight is
// (q-2)^d (q-1)^{s-d}.
Polynomial build_min_weight(const CodeParams& p,
                            std::span<const BinomialPair> pairs);

// A codeword of the second-smallest weight: the binomial-product-times-
// alternating-form construction in the small-d regime, its mirror through
// the C(d) ~ C(s-d) isomorphism in the large-d regime.
Polynomial build_next_to_min(const CodeParams& p);

// Footprint lower bound on the weight of f's codeword: (q-2)^d (q-1)^{s-d}
// when every remainder vanishes, otherwise that plus the number of box
// monomials divisible by the first nonzero remainder's leading monomial and
// not by t1..td. Requires 3 <= d <= s/2.
uint64_t weight_lower_bound(const Polynomial& f, const CodeParams& p);

// classify_remainder for every pivot at once, plus the derived verdicts;
// this is what the CLI surfaces.
struct ClassificationReport {
  VarPerm perm;
  Polynomial normalized_f;
  std::vector<RemainderClass> per_j;          // j = 1..d
  std::vector<uint64_t> bound_contributions;  // per pivot; 0 for Zero
  bool min_form_applicable = false;           // 2d <= s
  std::optional<std::vector<BinomialPair>> pairs;
  std::optional<uint64_t> lower_bound;  // present when 3 <= d <= s/2
};

ClassificationReport classify_all(const Polynomial& f, const CodeParams& p);

struct InequalityEntry {
  uint32_t q, s, d;
  bool pass;
  std::string detail;  // failure description, empty on pass
};

struct InequalityReport {
  std::vector<InequalityEntry> entries;
  bool all_pass = true;
};

// For each parameter set (3 <= d, 2d+2 <= s): checks that N(M4) is at most
// every competitor N(M1), N(M2, v >= 2), N(M3, v >= 1), that N(M3, 0) is
// strictly below N(M4), and that their gap equals (q-2)^{d-2}(q-1)^{s-d-2}.
InequalityReport verify_inequalities(std::span<const CodeParams> grid);

}  // namespace hyperweight
