#include "hyperweight/code.hpp"

#include <algorithm>
#include <string>

#include "hyperweight/util.hpp"

namespace hyperweight {

CodeParams::CodeParams(const Field& f, uint32_t s, uint32_t d)
    : field_(&f), s_(s), d_(d) {
  if (s < 2) throw InvalidArgument("code parameters need s >= 2");
  if (d < 1 || d >= s)
    throw InvalidArgument("code parameters need 1 <= d < s, got d = " +
                          std::to_string(d) + ", s = " + std::to_string(s));
}

uint64_t CodeParams::length() const { return checked_pow(q() - 1, s_); }

uint64_t CodeParams::dimension() const { return binomial(s_, d_); }

WeightReport weight(const Codeword& w) {
  WeightReport r;
  r.length = w.reps.size();
  for (uint16_t x : w.reps)
    if (x) ++r.weight;
  r.zeros = r.length - r.weight;
  return r;
}

uint64_t torus_size(const CodeParams& p) { return p.length(); }

namespace {

// Walks every torus point in index order, handing the callback the unit rep
// of each coordinate.
template <class F>
void for_each_point_reps(const CodeParams& p, F&& fn) {
  const uint32_t s = p.s();
  const uint32_t m = p.q() - 1;
  std::vector<uint32_t> digits(s, 0);
  std::vector<uint32_t> reps(s, 1);  // units()[0] == g^0 == 1
  const Field& F_ = p.field();
  for (uint32_t i = 0; i < s; ++i) reps[i] = F_.alog_of(0);
  const uint64_t total = p.length();
  for (uint64_t idx = 0;; ++idx) {
    fn(std::span<const uint32_t>(reps));
    if (idx + 1 == total) break;
    uint32_t i = s;
    while (digits[i - 1] == m - 1) {
      digits[i - 1] = 0;
      reps[i - 1] = F_.alog_of(0);
      --i;
    }
    ++digits[i - 1];
    reps[i - 1] = F_.alog_of(digits[i - 1]);
  }
}

}  // namespace

std::vector<FieldElement> torus_point(const CodeParams& p, uint64_t index) {
  const uint64_t n = p.length();
  if (index >= n) throw InvalidArgument("torus point index out of range");
  const uint32_t m = p.q() - 1;
  std::vector<FieldElement> pt(p.s(), p.field().zero());
  for (uint32_t j = p.s(); j-- > 0;) {
    pt[j] = p.field().element(p.field().alog_of(index % m));
    index /= m;
  }
  return pt;
}

std::vector<std::vector<FieldElement>> torus_points(const CodeParams& p,
                                                    uint64_t max_cells) {
  const uint64_t cells = checked_mul(p.length(), p.s());
  if (cells > max_cells)
    throw ResourceLimit("torus materialization of " + std::to_string(cells) +
                        " cells exceeds the gate of " +
                        std::to_string(max_cells));
  std::vector<std::vector<FieldElement>> pts;
  pts.reserve(p.length());
  const Field& F = p.field();
  for_each_point_reps(p, [&](std::span<const uint32_t> reps) {
    std::vector<FieldElement> pt;
    pt.reserve(reps.size());
    for (uint32_t r : reps) pt.push_back(F.element(r));
    pts.push_back(std::move(pt));
  });
  return pts;
}

std::vector<Monomial> hypersimplex_monomials(const CodeParams& p) {
  const uint32_t s = p.s(), d = p.d();
  std::vector<Monomial> out;
  out.reserve(binomial(s, d));
  std::vector<uint32_t> pick(d);
  for (uint32_t i = 0; i < d; ++i) pick[i] = i;  // 0-based positions
  while (true) {
    std::vector<uint32_t> exps(s, 0);
    for (uint32_t i : pick) exps[i] = 1;
    out.push_back(Monomial::from_exponents(std::move(exps)));
    // next combination
    uint32_t i = d;
    while (i > 0 && pick[i - 1] == s - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (uint32_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), grlex_greater);
  return out;
}

Codeword evaluate_on_torus(const Polynomial& f, const CodeParams& p,
                           uint64_t max_cells) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s())
    throw InvalidArgument("polynomial arity does not match code parameters");
  const uint64_t n = p.length();
  if (n > max_cells)
    throw ResourceLimit("torus of " + std::to_string(n) +
                        " points exceeds the gate of " +
                        std::to_string(max_cells));
  const Field& F = p.field();
  Codeword w{&F, {}};
  w.reps.reserve(n);
  for_each_point_reps(p, [&](std::span<const uint32_t> reps) {
    uint32_t acc = 0;
    for (const auto& t : f.terms()) {
      uint32_t v = t.coeff.rep();
      auto exps = t.mono.exponents();
      for (uint32_t i = 0; i < exps.size() && v; ++i)
        if (exps[i]) v = F.mul_rep(v, F.pow_rep(reps[i], exps[i]));
      acc = F.add_rep(acc, v);
    }
    w.reps.push_back(static_cast<uint16_t>(acc));
  });
  return w;
}

Encoder::Encoder(const CodeParams& p, uint64_t max_cells) : params_(p) {
  basis_ = hypersimplex_monomials(p);
  n_ = p.length();
  const uint64_t cells = checked_mul(n_, basis_.size());
  if (cells > max_cells)
    throw ResourceLimit("basis matrix of " + std::to_string(cells) +
                        " cells exceeds the gate of " +
                        std::to_string(max_cells));
  const Field& F = p.field();
  const uint32_t q = p.q();

  std::vector<std::vector<uint16_t>> base(basis_.size());
  for (auto& row : base) row.reserve(n_);
  for_each_point_reps(p, [&](std::span<const uint32_t> reps) {
    for (size_t m = 0; m < basis_.size(); ++m) {
      uint32_t v = 1;
      auto exps = basis_[m].exponents();
      for (uint32_t i = 0; i < exps.size(); ++i)
        if (exps[i]) v = F.mul_rep(v, F.pow_rep(reps[i], exps[i]));
      base[m].push_back(static_cast<uint16_t>(v));
    }
  });

  scaled_.resize(basis_.size() * (q - 1));
  for (size_t m = 0; m < basis_.size(); ++m) {
    for (uint32_t c = 1; c < q; ++c) {
      auto& row = scaled_[m * (q - 1) + (c - 1)];
      if (c == 1) {
        row = base[m];
        continue;
      }
      row.resize(n_);
      for (uint64_t i = 0; i < n_; ++i)
        row[i] = static_cast<uint16_t>(F.mul_rep(c, base[m][i]));
    }
  }
}

const std::vector<uint16_t>& Encoder::scaled_row(size_t mono_idx,
                                                 uint32_t c) const {
  return scaled_[mono_idx * (params_.q() - 1) + (c - 1)];
}

void Encoder::encode_reps(std::span<const uint32_t> coeff_reps,
                          std::vector<uint16_t>& out) const {
  if (coeff_reps.size() != basis_.size())
    throw InvalidArgument("coefficient tuple has arity " +
                          std::to_string(coeff_reps.size()) + ", expected " +
                          std::to_string(basis_.size()));
  out.assign(n_, 0);
  const Field& F = params_.field();
  for (size_t m = 0; m < coeff_reps.size(); ++m) {
    uint32_t c = coeff_reps[m];
    if (c == 0) continue;
    F.add_rows(out, scaled_row(m, c));
  }
}

uint64_t Encoder::weight_of(std::span<const uint32_t> coeff_reps,
                            std::vector<uint16_t>& scratch) const {
  encode_reps(coeff_reps, scratch);
  uint64_t w = 0;
  for (uint16_t x : scratch)
    if (x) ++w;
  return w;
}

Codeword Encoder::encode(std::span<const FieldElement> coeffs) const {
  std::vector<uint32_t> reps;
  reps.reserve(coeffs.size());
  for (const FieldElement& c : coeffs) {
    require_same_field(&c.field(), &params_.field());
    reps.push_back(c.rep());
  }
  std::vector<uint16_t> out;
  encode_reps(reps, out);
  return Codeword{&params_.field(), std::move(out)};
}

Codeword encode(std::span<const FieldElement> coeffs, const CodeParams& p) {
  return Encoder(p).encode(coeffs);
}

SpectrumReport exhaustive_spectrum(const CodeParams& p,
                                   const SpectrumGates& gates) {
  const uint32_t q = p.q();
  const uint64_t dim = p.dimension();
  // q^dim, bailing out as soon as the gate is crossed
  uint64_t words = 1;
  for (uint64_t i = 0; i < dim; ++i) {
    if (words > gates.max_codewords / q)
      throw ResourceLimit(
          "exhaustive spectrum gate exceeded: q^dim > " +
          std::to_string(gates.max_codewords) + "; use sampling instead");
    words *= q;
  }
  if (checked_mul(words, p.length()) > gates.max_work)
    throw ResourceLimit("exhaustive spectrum work gate exceeded");

  Encoder enc(p);
  SpectrumReport rep;
  rep.codewords = words;
  std::vector<uint32_t> coeffs(dim, 0);
  std::vector<uint16_t> scratch;
  for (uint64_t idx = 0;; ++idx) {
    rep.counts[enc.weight_of(coeffs, scratch)]++;
    if (idx + 1 == words) break;
    size_t i = coeffs.size();
    while (coeffs[i - 1] == q - 1) coeffs[--i] = 0;
    ++coeffs[i - 1];
  }

  bool have_min = false;
  for (const auto& [w, c] : rep.counts) {
    if (w == 0) continue;
    if (!have_min) {
      rep.min_nonzero = w;
      have_min = true;
    } else {
      rep.second_nonzero = w;
      break;
    }
  }
  return rep;
}

std::map<uint64_t, uint64_t> sample_weights(const CodeParams& p, uint64_t seed,
                                            uint64_t count) {
  Encoder enc(p);
  SplitMix64 rng(seed);
  const uint32_t q = p.q();
  std::map<uint64_t, uint64_t> out;
  std::vector<uint32_t> coeffs(p.dimension());
  std::vector<uint16_t> scratch;
  for (uint64_t i = 0; i < count; ++i) {
    for (uint32_t& c : coeffs) c = static_cast<uint32_t>(rng.next() % q);
    out[enc.weight_of(coeffs, scratch)]++;
  }
  return out;
}

std::optional<std::vector<FieldElement>> coords_in_basis(const Polynomial& f,
                                                         const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s())
    throw InvalidArgument("polynomial arity does not match code parameters");
  std::vector<Monomial> basis = hypersimplex_monomials(p);
  std::map<Monomial, size_t, GrlexGreater> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<FieldElement> coeffs(basis.size(), p.field().zero());
  for (const auto& t : f.terms()) {
    auto it = index.find(t.mono);
    if (it == index.end()) return std::nullopt;
    coeffs[it->second] = t.coeff;
  }
  return coeffs;
}

uint64_t zeros_via_footprint(const Polynomial& f, const CodeParams& p) {
  require_same_field(&f.field(), &p.field());
  if (f.arity() != p.s())
    throw InvalidArgument("polynomial arity does not match code parameters");
  if (f.is_zero())
    throw InvalidArgument("zeros_via_footprint: zero polynomial");
  if (p.s() > 4)
    throw ResourceLimit(
        "zeros_via_footprint is gated to s <= 4 (full Groebner basis)");
  std::vector<Polynomial> gens;
  gens.reserve(p.s() + 1);
  for (uint32_t i = 1; i <= p.s(); ++i)
    gens.push_back(field_equation(p.field(), p.s(), i));
  gens.push_back(f);
  std::vector<Polynomial> gb = buchberger(gens);
  return footprint_size(gb, p.footprint_spec());
}

void write_codeword_csv(std::ostream& os, const Codeword& w) {
  for (uint16_t rep : w.reps) os << w.field->element_str(rep) << '\n';
}

void write_generator_matrix_csv(std::ostream& os, const CodeParams& p,
                                uint64_t max_cells) {
  const std::vector<Monomial> basis = hypersimplex_monomials(p);
  const uint64_t cells = checked_mul(p.length(), basis.size());
  if (cells > max_cells)
    throw ResourceLimit("generator matrix of " + std::to_string(cells) +
                        " cells exceeds the gate");
  const Field& F = p.field();
  for (const Monomial& m : basis) {
    bool first = true;
    for_each_point_reps(p, [&](std::span<const uint32_t> reps) {
      uint32_t v = 1;
      auto exps = m.exponents();
      for (uint32_t i = 0; i < exps.size(); ++i)
        if (exps[i]) v = F.mul_rep(v, F.pow_rep(reps[i], exps[i]));
      if (!first) os << ',';
      os << F.element_str(v);
      first = false;
    });
    os << '\n';
  }
}

}  // namespace hyperweight
