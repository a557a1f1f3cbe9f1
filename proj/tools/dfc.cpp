/*
 * Copyright (C) 2026 The dfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// dfc: command-line front end for the field, sum, code, invariance and design
// checks.
//
// Exit status: 0 when every check passes, 1 when a mathematical check fails,
// 2 for usage, configuration or budget errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dfc/codes.hpp"
#include "dfc/cyclo.hpp"
#include "dfc/designs.hpp"
#include "dfc/gf.hpp"
#include "dfc/invariance.hpp"
#include "dfc/json_io.hpp"
#include "dfc/options.hpp"
#include "dfc/sums.hpp"

namespace {

using namespace dfc;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  unsigned p = 3;
  unsigned m = 3;
  unsigned l = 1;
  std::string family = "c1";
  std::optional<std::uint64_t> weight;
  unsigned shards = 0;
  std::string out;
  double max_work = Budget{}.max_work;
  std::uint64_t max_blocks = Budget{}.max_blocks;
  std::string format = "text";
  std::string set;

  RunOptions options() const {
    RunOptions o;
    o.shards = shards ? shards : default_shards();
    o.budget.max_work = max_work;
    o.budget.max_blocks = max_blocks;
    return o;
  }
  bool json_out() const { return format == "json"; }
};

// Collects named pass/fail rows and prints them in either format.
class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  json& doc() { return doc_; }
  void info(const std::string& key, json value, const std::string& text) {
    doc_[key] = std::move(value);
    lines_.push_back(text);
  }
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    checks_.push_back(json{{"name", name}, {"ok", ok}, {"detail", detail}});
    lines_.push_back((ok ? "PASS  " : "FAIL  ") + name + (detail.empty() ? "" : "  (" + detail + ")"));
    all_ok_ = all_ok_ && ok;
  }
  void line(const std::string& text) { lines_.push_back(text); }

  int finish(const Config& cfg) {
    doc_["checks"] = checks_;
    doc_["ok"] = all_ok_;
    if (cfg.json_out()) {
      std::cout << json_io::write_canonical(doc_);
    } else {
      for (const auto& l : lines_) std::cout << l << "\n";
      std::cout << (all_ok_ ? "verdict: OK" : "verdict: FAILED") << "\n";
    }
    return all_ok_ ? kPass : kFail;
  }

 private:
  json doc_ = json::object();
  json checks_ = json::array();
  std::vector<std::string> lines_;
  bool all_ok_ = true;
};

std::string join_ints(std::span<const unsigned> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string dist_string(const cyclo::ValueDistribution& d) {
  std::ostringstream os;
  for (const auto& [v, c] : d) os << "  " << c << " x [" << v.to_string() << "]\n";
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
  if (!f) throw UsageError("write failed for " + path.string());
}

codes::CodeSpec code_spec(const Config& cfg) {
  if (cfg.m < 3) throw UsageError("code commands need m >= 3");
  return codes::make_code_spec(codes::parse_family(cfg.family), gf::make_field(cfg.p, cfg.m), cfg.l);
}

int cmd_field(const Config& cfg) {
  const gf::Field f = gf::make_field(cfg.p, cfg.m);
  Report r("field");
  std::vector<unsigned> mod(f.modulus().begin(), f.modulus().end());
  r.info("p", cfg.p, "field: GF(" + std::to_string(cfg.p) + "^" + std::to_string(cfg.m) + "), q = " +
                          std::to_string(f.q()));
  r.doc()["m"] = cfg.m;
  r.doc()["q"] = f.q();
  r.info("modulus", mod, "modulus coefficients c_0..c_m: " + join_ints(mod));

  std::vector<unsigned> fibers(f.p(), 0);
  int eta_sum = 0;
  unsigned squares = 0, non_squares = 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    ++fibers[f.trace(gf::Elem{x})];
    const int e = f.eta(gf::Elem{x});
    eta_sum += e;
    squares += e == 1;
    non_squares += e == -1;
  }
  r.info("trace_fibers", fibers, "trace fibers |Tr^-1(j)|, j = 0..p-1: " + join_ints(fibers));
  r.check("trace fibers balanced",
          std::all_of(fibers.begin(), fibers.end(), [&](unsigned c) { return c == f.q() / f.p(); }));
  r.info("eta", json{{"squares", squares}, {"non_squares", non_squares}, {"sum", eta_sum}},
         "eta: " + std::to_string(squares) + " squares, " + std::to_string(non_squares) + " non-squares, sum " +
             std::to_string(eta_sum));
  r.check("eta balanced", eta_sum == 0 && squares == f.n() / 2);

  const cyclo::CycInt g = cyclo::gauss_sum(f.p());
  const cyclo::CycInt g2 = g * g;
  r.info("gauss_sum", g.to_string(), "Gauss sum G = " + g.to_string());
  r.check("G^2 = p*", g2 == cyclo::CycInt::rational(f.p(), cyclo::p_star(f.p())),
          "p* = " + cyclo::p_star(f.p()).str());
  return r.finish(cfg);
}

int cmd_weights(const Config& cfg) {
  const auto spec = code_spec(cfg);
  const auto opts = cfg.options();
  check_work(codes::parameter_space_size(spec) * spec.field.q(), opts.budget, "weight enumeration");
  const auto brute = codes::weight_distribution_bruteforce(spec, opts);
  const auto closed = codes::weight_distribution_closed(spec);

  Report r("weights");
  r.doc()["family"] = codes::to_string(spec.family);
  r.doc()["p"] = cfg.p;
  r.doc()["m"] = cfg.m;
  r.doc()["l"] = cfg.l;
  const unsigned rank = codes::dimension_check(spec);
  r.info("enumerated", json_io::weight_distribution_doc(spec.field.q(), rank, brute),
         "enumerated:  " + codes::enumerator_string(brute));
  r.info("closed_form", json_io::weight_distribution_doc(spec.field.q(), codes::nominal_dimension(spec), closed),
         "closed form: " + codes::enumerator_string(closed));
  r.line("parameters: [" + std::to_string(spec.field.q()) + ", " + std::to_string(rank) + ", " +
         std::to_string(codes::minimum_distance(brute)) + "]");
  r.check("dimension", rank == codes::nominal_dimension(spec),
          std::to_string(rank) + " vs " + std::to_string(codes::nominal_dimension(spec)));
  std::string diff;
  for (const auto& [w, c] : brute) {
    const auto it = closed.find(w);
    const BigInt other = it == closed.end() ? BigInt(0) : it->second;
    if (other != c) diff += "A_" + std::to_string(w) + ": " + c.str() + " vs " + other.str() + "; ";
  }
  for (const auto& [w, c] : closed)
    if (!brute.count(w)) diff += "A_" + std::to_string(w) + ": 0 vs " + c.str() + "; ";
  r.check("enumeration matches closed-form table", brute == closed, diff);
  if (spec.family == codes::Family::C1ext) {
    const auto via_sums = codes::weight_distribution_from_sums(spec);
    r.doc()["from_sum_table"] = json_io::weight_distribution_doc(spec.field.q(), codes::nominal_dimension(spec), via_sums);
    r.check("enumeration matches value-table derivation", brute == via_sums);
  }
  if (!cfg.out.empty())
    write_file(cfg.out, json_io::write_canonical(json_io::weight_distribution_doc(spec.field.q(), rank, brute)));
  return r.finish(cfg);
}

unsigned other_l(unsigned m, unsigned l) {
  for (unsigned k = 1; k < 2 * m; ++k)
    if (k != l && gf::gcd(m, k) == 1) return k;
  return l;
}

int cmd_sums(const Config& cfg) {
  if (cfg.m < 3) throw UsageError("sums needs m >= 3");
  const gf::Field f = gf::make_field(cfg.p, cfg.m);
  const auto spec = sums::make_sum_spec(f, cfg.l);
  const auto opts = cfg.options();
  const double q = f.q();
  check_work(q * q * q * q, opts.budget, "value distribution");

  Report r("sums");
  r.doc()["p"] = cfg.p;
  r.doc()["m"] = cfg.m;
  r.doc()["l"] = cfg.l;
  const auto got = sums::value_distribution_abc(spec, opts);
  const auto want = sums::expected_table(spec);
  json values = json::array();
  for (const auto& [v, c] : got) values.push_back(json{{"value", v.to_string()}, {"count", c.str()}});
  r.info("distribution", values, "S(a,b,c) value distribution:\n" + dist_string(got));
  r.check("value distribution matches closed-form table", got == want);

  bool closed_ok = true;
  std::string first_bad;
  for (std::uint32_t a = 1; a < f.q(); ++a)
    for (std::uint32_t b = 0; b < f.q(); ++b)
      if (sums::sum_ab_closed(spec, gf::Elem{a}, gf::Elem{b}) != sums::sum_ab_direct(spec, gf::Elem{a}, gf::Elem{b})) {
        if (closed_ok) first_bad = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        closed_ok = false;
      }
  r.check("S(a,b) closed form equals direct sum, all a != 0", closed_ok, first_bad);

  bool dichotomy = true;
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    const auto sol = gf::solve_linearized(f, gf::Elem{a}, cfg.l, f.zero());
    const std::uint64_t want_count = sums::is_degenerate_quadratic(f, gf::Elem{a}) ? std::uint64_t(f.p()) * f.p() : 1;
    dichotomy = dichotomy && sol.count(f.p()) == want_count;
  }
  r.check("kernel of a^(p^l)x^(p^2l)+ax has size 1 or p^2 as predicted", dichotomy);

  const auto g = cyclo::gauss_sum(f.p());
  r.check("G^2 = p*", g * g == cyclo::CycInt::rational(f.p(), cyclo::p_star(f.p())));

  const unsigned l2 = other_l(cfg.m, cfg.l);
  if (l2 != cfg.l) {
    const auto other = sums::value_distribution_abc(sums::make_sum_spec(f, l2), opts);
    r.check("distribution independent of l", other == got, "l = " + std::to_string(cfg.l) + " vs " + std::to_string(l2));
  }
  return r.finish(cfg);
}

std::filesystem::path design_path(const Config& cfg, const codes::CodeSpec& spec, std::uint64_t k) {
  if (cfg.weight) return cfg.out;
  return std::filesystem::path(cfg.out) / ("design_" + codes::to_string(spec.family) + "_p" + std::to_string(cfg.p) +
                                           "_m" + std::to_string(cfg.m) + "_k" + std::to_string(k) + ".json");
}

int cmd_designs(const Config& cfg) {
  const auto spec = code_spec(cfg);
  const auto opts = cfg.options();
  check_work(codes::parameter_space_size(spec) * spec.field.q(), opts.budget, "weight enumeration");
  const auto dist = codes::weight_distribution_bruteforce(spec, opts);

  std::vector<std::uint64_t> weights;
  if (cfg.weight) {
    weights.push_back(*cfg.weight);
  } else {
    for (const auto& [w, c] : dist)
      if (w > 0 && c > 0) weights.push_back(w);
  }
  for (auto w : weights) {
    const auto it = dist.find(w);
    if (w == 0 || it == dist.end() || it->second == 0)
      throw UsageError("no codeword of weight " + std::to_string(w));
    if (it->second / (spec.field.p() - 1) > opts.budget.max_blocks)
      throw BudgetExceeded("weight " + std::to_string(w) + " exceeds --max-blocks");
  }

  Report r("designs");
  r.doc()["family"] = codes::to_string(spec.family);
  r.doc()["p"] = cfg.p;
  r.doc()["m"] = cfg.m;
  r.doc()["l"] = cfg.l;
  r.line("verdict  (i, b, lambda_counted, lambda_formula)");
  json rows = json::array();
  for (auto w : weights) {
    designs::Design d;
    const auto rep = designs::check_weight_class(spec, dist, w, opts, cfg.out.empty() ? nullptr : &d);
    std::string formula = rep.trivial ? "trivial" : rep.formula ? rep.formula->lambda.str() : "open";
    const std::string counted = rep.coverage.constant ? std::to_string(rep.coverage.lambda) : "not constant";
    std::string note;
    if (rep.formula && !rep.formula->note.empty()) note = rep.formula->note;
    if (rep.coverage.witness) {
      const auto& wt = *rep.coverage.witness;
      note = "pair {" + std::to_string(wt.first_u) + "," + std::to_string(wt.first_v) + "} in " +
             std::to_string(wt.first_count) + " blocks, pair {" + std::to_string(wt.second_u) + "," +
             std::to_string(wt.second_v) + "} in " + std::to_string(wt.second_count);
    }
    rows.push_back(json{{"i", w},
                        {"b", std::to_string(rep.blocks)},
                        {"codewords", rep.codewords.str()},
                        {"lambda_counted", counted},
                        {"lambda_formula", formula},
                        {"lambda_identity", rep.lambda_identity.str()},
                        {"within_support_bound", rep.within_support_bound},
                        {"ok", rep.ok()},
                        {"note", note}});
    r.check("(" + std::to_string(w) + ", " + std::to_string(rep.blocks) + ", " + counted + ", " + formula + ")",
            rep.ok(), note);
    if (!cfg.out.empty()) {
      const BigInt lambda = rep.coverage.constant ? BigInt(rep.coverage.lambda) : BigInt(0);
      write_file(design_path(cfg, spec, w), json_io::write_canonical(json_io::design_doc(d, lambda)));
    }
  }
  r.doc()["rows"] = rows;
  return r.finish(cfg);
}

std::set<std::uint64_t> parse_set(const std::string& text) {
  std::set<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--set expects comma-separated integers");
    out.insert(std::stoull(item));
  }
  return out;
}

int cmd_invariance(const Config& cfg) {
  Report r("invariance");
  std::set<std::uint64_t> tbar;
  std::uint64_t q;
  if (!cfg.set.empty()) {
    const gf::Field f = gf::make_field(cfg.p, cfg.m);
    q = f.q();
    tbar = parse_set(cfg.set);
    for (auto s : tbar)
      if (s >= q) throw UsageError("--set member " + std::to_string(s) + " is not below p^m");
    r.doc()["source"] = "synthetic";
  } else {
    const auto spec = code_spec(cfg);
    q = spec.field.q();
    const auto ds = invariance::defining_set(spec);
    tbar = ds.members;
    r.doc()["source"] = codes::to_string(spec.family);
  }
  std::string listed;
  for (auto s : tbar) listed += (listed.empty() ? "" : " ") + std::to_string(s);
  r.info("defining_set", std::vector<std::uint64_t>(tbar.begin(), tbar.end()),
         "defining set (" + std::to_string(tbar.size()) + "): " + listed);
  const auto full = invariance::is_affine_invariant(tbar, cfg.p, cfg.m);
  const auto step = invariance::is_affine_invariant_stepwise(tbar, cfg.p, cfg.m);
  if (full.invariant != step.invariant) throw std::logic_error("the two downward-closure tests disagree");
  std::string detail;
  if (full.witness) {
    detail = "witness s=" + std::to_string(full.witness->s) + " r=" + std::to_string(full.witness->r);
    r.doc()["witness"] = json{{"s", full.witness->s}, {"r", full.witness->r}};
  }
  r.check("downward closed under the p-adic order", full.invariant, detail);
  return r.finish(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace codes over F_p, their weight distributions and support designs"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool code) {
    sub->add_option("--p", cfg.p, "odd prime")->capture_default_str();
    sub->add_option("--m", cfg.m, "extension degree")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    if (!code) return;
    sub->add_option("--l", cfg.l, "exponent parameter, gcd(m, l) = 1")->capture_default_str();
    sub->add_option("--family", cfg.family, "code family")->check(CLI::IsMember({"c1", "c2"}))->capture_default_str();
    sub->add_option("--shards", cfg.shards, "worker threads (default: DFC_SHARDS or all cores)");
    sub->add_option("--max-work", cfg.max_work, "work budget in field evaluations")->capture_default_str();
  };

  auto* field = app.add_subcommand("field", "primitive polynomial, trace fibers and character checks");
  add_common(field, false);
  auto* weights = app.add_subcommand("weights", "enumerated vs closed-form weight distribution");
  add_common(weights, true);
  weights->add_option("--out", cfg.out, "write the enumerated distribution as JSON");
  auto* sums = app.add_subcommand("sums", "value distribution of S(a,b,c) and S(a,b) checks");
  add_common(sums, true);
  auto* designs = app.add_subcommand("designs", "support designs of each weight class");
  add_common(designs, true);
  designs->add_option("--weight", cfg.weight, "check a single weight");
  designs->add_option("--out", cfg.out, "design file (with --weight) or directory");
  designs->add_option("--max-blocks", cfg.max_blocks, "largest design to materialize")->capture_default_str();
  auto* inv = app.add_subcommand("invariance", "affine invariance of the extended code");
  add_common(inv, true);
  inv->add_option("--set", cfg.set, "test a comma-separated set instead of the family's defining set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*field) return cmd_field(cfg);
    if (*weights) return cmd_weights(cfg);
    if (*sums) return cmd_sums(cfg);
    if (*designs) return cmd_designs(cfg);
    if (*inv) return cmd_invariance(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
