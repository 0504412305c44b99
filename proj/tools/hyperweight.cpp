// hyperweight — CLI for toric codes over hypersimplices: parameter reports,
// codeword weights, remainder classification, weight spectra, and the full
// verification suite. Exit codes: 0 success, 1 check failure, 2 usage error,
// 3 resource gate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperweight/code.hpp"
#include "hyperweight/extremal.hpp"
#include "hyperweight/parser.hpp"
#include "hyperweight/util.hpp"
#include "hyperweight/verify.hpp"

namespace hw = hyperweight;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  uint64_t q = 0;
  uint32_t s = 0;
  uint32_t d = 0;
  std::string f;
  uint64_t seed = 42;
  std::optional<uint64_t> samples;
  std::string format = "json";
  bool experimental = false;
  std::string out;
};

uint64_t max_cells_gate() {
  if (const char* env = std::getenv("HYPERWEIGHT_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw hw::InvalidArgument("HYPERWEIGHT_MAX_CELLS must be a positive integer");
  }
  return hw::kDefaultMaxCells;
}

std::unique_ptr<hw::Field> make_field(uint64_t q) {
  auto pk = hw::factor_prime_power(q);
  if (!pk)
    throw hw::InvalidArgument("q = " + std::to_string(q) +
                              " is not a prime power");
  return std::make_unique<hw::Field>(pk->first, pk->second);
}

// Counts above 2^53 go out as decimal strings so JSON consumers that parse
// numbers as doubles stay lossless.
json json_count(uint64_t v) {
  if (v <= (uint64_t{1} << 53)) return v;
  return std::to_string(v);
}

std::string regime_name(const hw::CodeParams& p) {
  if (p.small_d()) return "small_d";
  if (p.large_d()) return "large_d";
  return "boundary";
}

void emit(const json& report, const Options& opt) {
  std::string text;
  if (opt.format == "csv") {
    std::ostringstream os;
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (it.value().is_structured())
        os << it.key() << ',' << it.value().dump() << '\n';
      else if (it.value().is_string())
        os << it.key() << ',' << it.value().get<std::string>() << '\n';
      else
        os << it.key() << ',' << it.value().dump() << '\n';
    }
    text = os.str();
  } else {
    text = report.dump(2) + "\n";
  }
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw hw::InvalidArgument("cannot open output file " + opt.out);
    f << text;
  }
}

int cmd_params(const Options& opt) {
  auto F = make_field(opt.q);
  hw::CodeParams params(*F, opt.s, opt.d);
  json rep;
  rep["schema"] = "hyperweight/1";
  rep["command"] = "params";
  rep["q"] = F->q();
  rep["s"] = opt.s;
  rep["d"] = opt.d;
  rep["n"] = json_count(params.length());
  rep["dim"] = json_count(params.dimension());
  rep["regime"] = regime_name(params);
  if (opt.d < 3) {
    rep["delta"] = nullptr;
    rep["next_to_minimal"] = nullptr;
    rep["note"] = "the closed-form weights require 3 <= d < s";
  } else {
    rep["delta"] = json_count(hw::min_distance(params));
    if (params.boundary()) {
      std::string which =
          params.s() == 2 * params.d()
              ? "unresolved (s = 2d)"
              : (params.s() == 2 * params.d() + 1 ? "unresolved (s = 2d + 1)"
                                                  : "unresolved (s = 2d - 1)");
      rep["next_to_minimal"] = which;
      if (opt.experimental) {
        if (auto ex = hw::experimental_next_to_min(params)) {
          rep["next_to_minimal_experimental"] = {
              {"value", json_count(ex->value)}, {"provenance", ex->note}};
        }
      }
    } else {
      rep["next_to_minimal"] = json_count(hw::next_to_min(params));
    }
  }
  emit(rep, opt);
  return 0;
}

int cmd_weight(const Options& opt) {
  auto F = make_field(opt.q);
  hw::Polynomial f = hw::parse_polynomial(opt.f, *F, opt.s);
  const uint32_t d = opt.d ? opt.d : 1;
  hw::CodeParams params(*F, opt.s, d);
  hw::Codeword w = hw::evaluate_on_torus(f, params, max_cells_gate());
  hw::WeightReport wr = hw::weight(w);
  json rep;
  rep["schema"] = "hyperweight/1";
  rep["command"] = "weight";
  rep["q"] = F->q();
  rep["s"] = opt.s;
  rep["f"] = f.str();
  rep["weight"] = json_count(wr.weight);
  rep["zeros"] = json_count(wr.zeros);
  rep["length"] = json_count(wr.length);
  std::string text = rep.dump(2) + "\n";
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw hw::InvalidArgument("cannot open output file " + opt.out);
    hw::write_codeword_csv(out, w);
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  auto F = make_field(opt.q);
  hw::CodeParams params(*F, opt.s, opt.d);
  hw::Polynomial f = hw::parse_polynomial(opt.f, *F, opt.s);
  hw::ClassificationReport cr = hw::classify_all(f, params);
  json rep;
  rep["schema"] = "hyperweight/1";
  rep["command"] = "classify";
  rep["q"] = F->q();
  rep["s"] = opt.s;
  rep["d"] = opt.d;
  rep["f"] = f.str();
  rep["normalized_f"] = cr.normalized_f.str();
  json perm = json::array();
  for (uint32_t i = 1; i <= params.s(); ++i)
    perm.push_back(cr.perm.to_normalized(i));
  rep["permutation_to_normalized"] = perm;
  json per_j = json::array();
  for (uint32_t j = 1; j <= params.d(); ++j) {
    const hw::RemainderClass& rc = cr.per_j[j - 1];
    json e;
    e["j"] = j;
    e["class"] = std::string(hw::to_string(rc.tag));
    if (rc.tag == hw::RemainderTag::M2 || rc.tag == hw::RemainderTag::M3) {
      e["u"] = rc.u;
      e["v"] = rc.v;
    }
    if (rc.tag == hw::RemainderTag::M3) e["e"] = rc.e;
    if (rc.witness_normalized) {
      e["witness_normalized"] = rc.witness_normalized->str();
      e["witness_original"] = rc.witness_original->str();
    }
    e["bound_contribution"] = json_count(cr.bound_contributions[j - 1]);
    per_j.push_back(e);
  }
  rep["remainders"] = per_j;
  if (!cr.min_form_applicable) {
    rep["min_weight_form"] = "not applicable (2d > s)";
  } else if (cr.pairs) {
    json pairs = json::array();
    for (const hw::BinomialPair& bp : *cr.pairs)
      pairs.push_back({{"i", bp.i}, {"c", bp.c}, {"a", bp.a.str()}});
    rep["min_weight_form"] = {{"verdict", "minimum-weight form"},
                              {"pairs", pairs}};
  } else {
    rep["min_weight_form"] = {{"verdict", "not of minimum-weight form"}};
  }
  if (cr.lower_bound)
    rep["weight_lower_bound"] = json_count(*cr.lower_bound);
  else
    rep["weight_lower_bound"] = "not applicable (requires 3 <= d <= s/2)";
  emit(rep, opt);
  return 0;
}

int cmd_spectrum(const Options& opt) {
  auto F = make_field(opt.q);
  hw::CodeParams params(*F, opt.s, opt.d);
  json rep;
  rep["schema"] = "hyperweight/1";
  rep["command"] = "spectrum";
  rep["q"] = F->q();
  rep["s"] = opt.s;
  rep["d"] = opt.d;
  std::map<uint64_t, uint64_t> dist;
  if (opt.samples) {
    rep["mode"] = "sampled";
    rep["seed"] = opt.seed;
    rep["samples"] = *opt.samples;
    dist = hw::sample_weights(params, opt.seed, *opt.samples);
    uint64_t min_nz = 0;
    for (const auto& [w, c] : dist)
      if (w != 0) {
        min_nz = w;
        break;
      }
    rep["min_nonzero_observed"] = json_count(min_nz);
  } else {
    hw::SpectrumGates gates;
    gates.max_work = max_cells_gate();
    hw::SpectrumReport sp = hw::exhaustive_spectrum(params, gates);
    rep["mode"] = "exhaustive";
    rep["codewords"] = json_count(sp.codewords);
    rep["min_nonzero"] = json_count(sp.min_nonzero);
    if (sp.second_nonzero)
      rep["second_min_nonzero"] = json_count(*sp.second_nonzero);
    else
      rep["second_min_nonzero"] = nullptr;
    dist = sp.counts;
  }
  json d = json::array();
  for (const auto& [w, c] : dist)
    d.push_back({json_count(w), json_count(c)});
  rep["distribution"] = d;

  if (opt.format == "csv") {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : dist) os << w << ',' << c << '\n';
    std::cout << os.str();
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      if (!f) throw hw::InvalidArgument("cannot open output file " + opt.out);
      f << os.str();
    }
    return 0;
  }
  emit(rep, opt);
  return 0;
}

int cmd_verify(const Options& opt) {
  std::vector<hw::CheckResult> checks = hw::run_verification_suite(opt.seed);
  json rep;
  rep["schema"] = "hyperweight/1";
  rep["command"] = "verify";
  rep["seed"] = opt.seed;
  json arr = json::array();
  for (const hw::CheckResult& c : checks) {
    arr.push_back({{"id", c.id},
                   {"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"millis", c.millis},
                   {"detail", c.detail}});
  }
  rep["checks"] = arr;
  const bool ok = hw::all_passed(checks);
  rep["all_pass"] = ok;
  if (opt.experimental) {
    // Conjectural boundary-regime values, printed but never asserted.
    json ex = json::array();
    const uint32_t cases[][3] = {{5, 7, 3}, {5, 5, 3}, {7, 9, 4}, {7, 7, 4}};
    for (auto [q, s, d] : cases) {
      auto F = make_field(q);
      hw::CodeParams p(*F, s, d);
      if (auto v = hw::experimental_next_to_min(p))
        ex.push_back({{"q", q},
                      {"s", s},
                      {"d", d},
                      {"value", json_count(v->value)},
                      {"provenance", v->note}});
    }
    rep["experimental_boundary_values"] = ex;
  }
  emit(rep, opt);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric codes over hypersimplices: weights, remainders, spectra"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool need_q, bool need_s, bool need_d) {
    auto* q = sub->add_option("--q", opt.q, "field order (a prime power)");
    auto* s = sub->add_option("--s", opt.s, "number of variables");
    auto* d = sub->add_option("--d", opt.d, "hypersimplex level");
    if (need_q) q->required();
    if (need_s) s->required();
    if (need_d) d->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out, "also write the result to this path");
    sub->add_option("--seed", opt.seed, "PRNG seed");
    sub->add_flag("--experimental", opt.experimental,
                  "include unproven boundary-regime values");
  };

  CLI::App* params = app.add_subcommand("params", "report code parameters");
  add_common(params, true, true, true);

  CLI::App* weightc = app.add_subcommand("weight", "weight of one codeword");
  add_common(weightc, true, true, false);
  weightc->add_option("--f", opt.f, "polynomial to evaluate")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "remainder classes per pivot");
  add_common(classify, true, true, true);
  classify->add_option("--f", opt.f, "monic square-free homogeneous input")
      ->required();

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "exhaustive or sampled weight spectrum");
  add_common(spectrum, true, true, true);
  uint64_t samples = 0;
  spectrum->add_option("--samples", samples,
                       "sample this many random codewords instead");

  CLI::App* verify =
      app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (params->parsed()) return cmd_params(opt);
    if (weightc->parsed()) return cmd_weight(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (spectrum->parsed()) {
      if (spectrum->count("--samples")) opt.samples = samples;
      return cmd_spectrum(opt);
    }
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const hw::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hw::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
