// placement-opt: generate instances, run placement solvers, estimate revenue,
// compare algorithms and run property checks from the command line.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "placement/assortment_oracle.hpp"
#include "placement/errors.hpp"
#include "placement/estimation.hpp"
#include "placement/instances.hpp"
#include "placement/json_io.hpp"
#include "placement/properties.hpp"
#include "placement/seeding.hpp"
#include "placement/solvers.hpp"

using namespace placement;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitInternal = 4;

const std::vector<std::string> kAlgorithms(std::begin(kAlgorithmNames),
                                           std::end(kAlgorithmNames));

struct Options {
  // gen
  std::string family;
  int k = 4;
  int m = 4;
  int n = 5;
  int q = 0;
  std::string sets;
  std::string model = "mnl";
  std::string browsing = "line";
  double price_min = 1.0;
  double price_max = 10.0;
  // solve / compare / estimate / verify
  std::string instance_path;
  std::string algorithm;
  std::vector<std::string> algorithms;
  std::string oracle = "auto";
  std::string placement;
  int repetitions = 32;
  int trials = 100;
  double epsilon = 0.1;
  double delta = 0.05;
  std::optional<std::int64_t> samples_override;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string csv;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text << '\n';
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "0,1;1,2;3" -> {{0,1},{1,2},{3}}
std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream in(text);
  std::string group;
  while (std::getline(in, group, ';')) out.push_back(parse_int_list(group, ','));
  return out;
}

Instance generate(const Options& o) {
  if (o.family == "lemma-single-1") return gen_lemma_single_1(o.k);
  if (o.family == "lemma-single-2") return gen_lemma_single_2(o.m);
  if (o.family == "instance-i") return gen_instance_i(o.m, o.epsilon).instance;
  if (o.family == "max-coverage") {
    const auto sets = parse_sets(o.sets);
    int q = o.q;
    if (q == 0) {
      for (const auto& s : sets) {
        for (int e : s) q = std::max(q, e + 1);
      }
    }
    return gen_max_coverage_mmnl(sets, q, o.k, o.epsilon);
  }
  RandomInstanceOptions r;
  r.n = o.n;
  r.m = o.m;
  r.model = parse_model_family(o.model);
  r.browsing = parse_browsing_family(o.browsing);
  r.price_min = o.price_min;
  r.price_max = o.price_max;
  r.seed = o.seed;
  return gen_random(r);
}

SolveReport solve(const Instance& inst, const std::string& algorithm, const Options& o) {
  RandomizedOptions r;
  r.repetitions = o.repetitions;
  r.seed = o.seed;
  r.epsilon = o.epsilon;
  r.delta = o.delta;
  r.samples_override = o.samples_override;
  return solve_named(inst, algorithm, o.oracle, r);
}

bool brute_feasible(const Instance& inst) {
  return inst.browsing().enumerable() &&
         std::pow(static_cast<double>(inst.n()), inst.m()) <= kBruteForceMaxPlacements;
}

int run_gen(const Options& o) {
  write_output(o.out, dump_instance(generate(o)));
  return 0;
}

int run_solve(const Options& o) {
  const Instance inst = load_instance(o.instance_path);
  write_output(o.out, to_json(solve(inst, o.algorithm, o)).dump(2));
  return 0;
}

int run_compare(const Options& o) {
  const Instance inst = load_instance(o.instance_path);
  std::vector<std::string> names = o.algorithms;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::map<std::string, SolveReport> reports;
  std::map<std::string, std::string> skipped;
  for (const std::string& name : names) {
    try {
      reports.emplace(name, solve(inst, name, o));
    } catch (const ContractError& e) {
      skipped.emplace(name, e.what());
    }
  }
  std::optional<double> opt;
  if (reports.count("brute")) {
    opt = reports.at("brute").value();
  } else if (brute_feasible(inst)) {
    opt = *brute_force_placement(inst).w_exact;
  }
  double best = 0.0;
  for (const auto& [name, r] : reports) best = std::max(best, r.value());

  Json rows = Json::array();
  std::ostringstream csv;
  csv << std::setprecision(12);
  csv << "algorithm,w,ratio_to_best,ratio_to_brute,k,ms\n";
  std::printf("%-16s %14s %14s %15s\n", "algorithm", "W", "ratio-to-best", "ratio-to-brute");
  for (const auto& [name, r] : reports) {
    const double w = r.value();
    const double to_best = best > 0 ? w / best : 1.0;
    Json row = {{"algorithm", name}, {"w", w}, {"ratio_to_best", to_best},
                {"report", to_json(r)}};
    std::optional<double> to_brute;
    if (opt) to_brute = *opt > 0 ? w / *opt : 1.0;
    row["ratio_to_brute"] = to_brute ? Json(*to_brute) : Json(nullptr);
    rows.push_back(row);
    char brute_col[32] = "n/a";
    if (to_brute) std::snprintf(brute_col, sizeof brute_col, "%.6f", *to_brute);
    std::printf("%-16s %14.8f %14.6f %15s\n", name.c_str(), w, to_best, brute_col);
    csv << name << ',' << w << ',' << to_best << ',';
    if (to_brute) csv << *to_brute;
    csv << ',' << (r.k ? std::to_string(*r.k) : "") << ',' << r.ms << '\n';
  }
  Json skipped_json = Json::object();
  for (const auto& [name, why] : skipped) {
    std::printf("%-16s skipped: %s\n", name.c_str(), why.c_str());
    skipped_json[name] = why;
  }
  if (!o.out.empty()) save_json(o.out, Json{{"rows", rows}, {"skipped", skipped_json}});
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw std::runtime_error("cannot write '" + o.csv + "'");
    out << csv.str();
  }
  return 0;
}

int run_estimate(const Options& o) {
  const Instance inst = load_instance(o.instance_path);
  Placement x = o.placement.empty() ? Placement::empty(inst.m())
                                    : Placement(parse_int_list(o.placement, ','));
  x = fill_empty(inst, x);
  const EstimationPlan plan = make_plan(inst, o.epsilon, o.delta, o.samples_override);
  const Estimate e = estimate_w(inst, x, plan, o.seed);
  Json j = {{"placement", x.slots()},
            {"w_estimate", e.value},
            {"std_error", e.std_error},
            {"epsilon", plan.epsilon},
            {"delta", plan.delta},
            {"samples", plan.samples},
            {"seed", o.seed}};
  if (inst.browsing().enumerable()) j["w_exact"] = evaluate_exact(inst, x);
  write_output(o.out, j.dump(2));
  return 0;
}

int run_verify(const Options& o) {
  const Instance inst = load_instance(o.instance_path);
  Json results = Json::object();
  bool ok = true;
  auto note = [&](const std::string& name, bool passed, Json detail) {
    detail["passed"] = passed;
    results[name] = std::move(detail);
    ok = ok && passed;
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    results[name] = {{"skipped", why}};
  };

  const auto rationality =
      check_weak_rationality(inst.choice_model(), inst.n() <= 10 ? 0 : o.trials, o.seed);
  note("weak_rationality", rationality.empty(), {{"violations", rationality.size()}});

  if (inst.n() <= 20) {
    const auto addition = check_highest_price_addition(inst);
    note("highest_price_addition", addition.empty(), {{"violations", addition.size()}});
  } else {
    skip("highest_price_addition", "n > 20");
  }

  if (!inst.browsing().enumerable()) {
    skip("pair_objective_submodularity", "browsing is not enumerable");
  } else if (!inst.uniform_prices()) {
    skip("pair_objective_submodularity", "prices differ");
  } else if (inst.n() * inst.m() > kMaxExhaustiveGround) {
    skip("pair_objective_submodularity", "n * m too large for exhaustive check");
  } else {
    const SetFunctionCheck c = check_pair_objective(inst);
    note("pair_objective_submodularity", c.ok(),
         {{"monotone_violations", c.monotone_violations},
          {"submodular_violations", c.submodular_violations},
          {"examples", c.examples}});
  }

  const ChoiceKind kind = inst.choice_model().kind();
  if ((kind == ChoiceKind::kMarkov || kind == ChoiceKind::kMnl) &&
      inst.n() <= kBruteForceMaxProducts) {
    std::int64_t violations = 0;
    int checked = 0;
    for (int k = 1; k <= std::min(inst.n(), kMaxExhaustiveGround); ++k) {
      const OracleAssortment s = brute_force_assortment(inst.choice_model(), inst.prices(), k);
      const SetFunctionCheck c = check_revenue_on(inst, s.members);
      violations += c.monotone_violations + c.submodular_violations;
      ++checked;
    }
    note("reduced_ground_set_submodularity", violations == 0,
         {{"cardinalities_checked", checked}, {"violations", violations}});
  } else {
    skip("reduced_ground_set_submodularity", "needs a Markov/MNL model with n <= 22");
  }

  if (inst.browsing().enumerable()) {
    const Placement x = fill_empty(inst, Placement::empty(inst.m()));
    const double w = evaluate_exact(inst, x);
    const EstimationPlan plan = make_plan(inst, o.epsilon, o.delta, o.samples_override);
    // Hoeffding width for T samples bounded by the largest price.
    const double width = inst.max_price() * std::sqrt(std::log(1.0 / o.delta) /
                                                      (2.0 * static_cast<double>(plan.samples)));
    int covered = 0;
    for (int t = 0; t < o.trials; ++t) {
      const double est = estimate_w(inst, x, plan, derive_seed(o.seed, "verify", t)).value;
      covered += std::abs(est - w) <= width ? 1 : 0;
    }
    const double rate = static_cast<double>(covered) / o.trials;
    // Allow three binomial standard deviations below the guaranteed 1 - 2 delta.
    const double floor_rate =
        (1.0 - 2.0 * o.delta) - 3.0 * std::sqrt(2.0 * o.delta * (1.0 - 2.0 * o.delta) / o.trials);
    note("estimator_coverage", rate >= floor_rate,
         {{"covered", covered}, {"trials", o.trials}, {"width", width}, {"samples", plan.samples}});
  } else {
    skip("estimator_coverage", "browsing is not enumerable");
  }

  write_output(o.out, Json{{"passed", ok}, {"checks", results}}.dump(2));
  return ok ? 0 : kExitViolation;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Root random seed")->capture_default_str();
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

void add_instance(CLI::App* cmd, Options& o) {
  cmd->add_option("--instance", o.instance_path, "Instance JSON file")->required();
}

void add_accuracy(CLI::App* cmd, Options& o) {
  cmd->add_option("--epsilon", o.epsilon, "Estimation accuracy")->capture_default_str();
  cmd->add_option("--delta", o.delta, "Estimation failure probability")->capture_default_str();
  cmd->add_option("--samples-override", o.samples_override, "Fixed Monte-Carlo sample count");
}

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--oracle", o.oracle, "Assortment oracle")
      ->check(CLI::IsMember({"auto", "brute", "mnl-exact", "greedy-uniform"}))
      ->capture_default_str();
  cmd->add_option("--repetitions", o.repetitions, "Draws per k for randomized")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_accuracy(cmd, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product placement optimization under choice models and browsing distributions"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate an instance JSON");
  gen->add_option("--family", o.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"lemma-single-1", "lemma-single-2", "instance-i", "max-coverage", "random"}));
  gen->add_option("--k", o.k, "Cardinality (lemma-single-1, max-coverage)")->capture_default_str();
  gen->add_option("--m", o.m, "Locations")->capture_default_str();
  gen->add_option("--n", o.n, "Products (random)")->capture_default_str();
  gen->add_option("--epsilon", o.epsilon, "Family parameter (instance-i, max-coverage)")
      ->capture_default_str();
  gen->add_option("--sets", o.sets, "Coverage sets, e.g. \"0,1;1,2;3\"");
  gen->add_option("--q", o.q, "Coverage universe size (default: largest element + 1)");
  gen->add_option("--model", o.model, "Random choice model")
      ->check(CLI::IsMember({"mnl", "markov", "mmnl", "ranked"}))
      ->capture_default_str();
  gen->add_option("--browsing", o.browsing, "Random browsing family")
      ->check(CLI::IsMember({"line", "explicit", "singleton", "full"}))
      ->capture_default_str();
  gen->add_option("--price-min", o.price_min)->capture_default_str();
  gen->add_option("--price-max", o.price_max)->capture_default_str();
  add_common(gen, o);

  auto* solve_cmd = app.add_subcommand("solve", "Run one placement algorithm");
  add_instance(solve_cmd, o);
  solve_cmd->add_option("--algorithm", o.algorithm, "Algorithm")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  add_solver_flags(solve_cmd, o);
  add_common(solve_cmd, o);

  auto* compare = app.add_subcommand("compare", "Run several algorithms and tabulate W");
  add_instance(compare, o);
  compare->add_option("--algorithms", o.algorithms, "Comma-separated algorithms")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgorithms));
  compare->add_option("--csv", o.csv, "CSV companion output");
  add_solver_flags(compare, o);
  add_common(compare, o);

  auto* estimate = app.add_subcommand("estimate", "Monte-Carlo estimate of W for a placement");
  add_instance(estimate, o);
  estimate->add_option("--placement", o.placement,
                       "Comma-separated product per location; -1 or omitted slots get i*");
  add_accuracy(estimate, o);
  add_common(estimate, o);

  auto* verify = app.add_subcommand("verify", "Run property checks on an instance");
  add_instance(verify, o);
  verify->add_option("--trials", o.trials, "Random trials (rationality sampling, coverage)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_accuracy(verify, o);
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return run_gen(o);
    if (*solve_cmd) return run_solve(o);
    if (*compare) return run_compare(o);
    if (*estimate) return run_estimate(o);
    if (*verify) return run_verify(o);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // Contract errors, invalid arguments and out-of-domain parameters.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
