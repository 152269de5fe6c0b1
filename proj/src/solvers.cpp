#include "placement/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "placement/errors.hpp"
#include "placement/estimation.hpp"
#include "placement/parallel.hpp"

namespace placement {
namespace {

constexpr double kTieTolerance = 1e-12;

bool improves(double candidate, double best) {
  return candidate > best + kTieTolerance * std::max(1.0, std::abs(best));
}

class Stopwatch {
 public:
  [[nodiscard]] std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<WeightedLocations> require_support(const Instance& instance,
                                               const std::string& algorithm) {
  if (!instance.browsing().enumerable()) {
    throw UnsupportedOperation(algorithm +
                               " needs an enumerable browsing distribution");
  }
  return instance.browsing().enumerate();
}

// Places S*_k (ascending id, dummies as i*) in the first k slots.
Placement prefix_placement(const Instance& instance, const OracleAssortment& s) {
  Placement x = Placement::empty(instance.m());
  const std::vector<ProductId> slots = s.slots(instance.highest_price_product());
  for (std::size_t j = 0; j < slots.size(); ++j) x[static_cast<LocationId>(j)] = slots[j];
  return fill_empty(instance, std::move(x));
}

struct Candidate {
  Placement placement;
  double value = 0.0;
  int k = 0;
  bool set = false;
};

}  // namespace

SolveReport brute_force_placement(const Instance& instance) {
  const Stopwatch clock;
  const double space = std::pow(static_cast<double>(instance.n()), instance.m());
  if (space > kBruteForceMaxPlacements) {
    throw SizeGuardError("brute-force placement: n^m = " + std::to_string(space) +
                         " exceeds the limit of 2e6");
  }
  const std::vector<WeightedLocations> support = require_support(instance, "brute");
  RevenueCache cache(instance);

  std::vector<ProductId> slots(static_cast<std::size_t>(instance.m()), 0);
  Placement best(slots);
  double best_value = evaluate_on_support(support, best, cache);
  // Odometer over [0, n)^m, last slot fastest.
  while (true) {
    int pos = instance.m() - 1;
    while (pos >= 0 && slots[pos] == instance.n() - 1) slots[pos--] = 0;
    if (pos < 0) break;
    ++slots[pos];
    const Placement x(slots);
    const double w = evaluate_on_support(support, x, cache);
    if (improves(w, best_value)) {
      best_value = w;
      best = x;
    }
  }

  SolveReport report;
  report.algorithm = "brute";
  report.placement = std::move(best);
  report.w_exact = best_value;
  report.ms = clock.ms();
  return report;
}

SolveReport best_of_many_line(const Instance& instance, const AssortmentOracle& oracle) {
  const Stopwatch clock;
  if (!instance.browsing().is_line()) {
    throw ContractError("best-of-many requires line browsing");
  }
  const std::vector<WeightedLocations> support = instance.browsing().enumerate();
  RevenueCache cache(instance);
  Candidate best;
  for (int k = 1; k <= instance.m(); ++k) {
    Placement x = prefix_placement(instance, oracle.best_assortment(k));
    const double w = evaluate_on_support(support, x, cache);
    if (!best.set || improves(w, best.value)) best = {std::move(x), w, k, true};
  }
  SolveReport report;
  report.algorithm = "best-of-many";
  report.placement = std::move(best.placement);
  report.w_exact = best.value;
  report.k = best.k;
  report.ms = clock.ms();
  return report;
}

SolveReport randomized_placement(const Instance& instance, const AssortmentOracle& oracle,
                                 const RandomizedOptions& options) {
  const Stopwatch clock;
  if (options.repetitions < 1) {
    throw std::domain_error("randomized placement: repetitions must be >= 1");
  }
  const int m = instance.m();
  const bool exact = instance.browsing().enumerable();
  const std::vector<WeightedLocations> support =
      exact ? instance.browsing().enumerate() : std::vector<WeightedLocations>{};
  std::optional<EstimationPlan> plan;
  if (!exact) {
    plan = make_plan(instance, options.epsilon, options.delta, options.samples_override);
  }

  // Oracle calls stay sequential; plug-in oracles need not be thread-safe.
  std::vector<std::vector<ProductId>> pools;
  pools.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    pools.push_back(oracle.best_assortment(k).slots(instance.highest_price_product()));
  }

  std::vector<Candidate> per_k(static_cast<std::size_t>(m));
  parallel_for(per_k.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 1;
    const std::vector<ProductId>& pool = pools[idx];
    Rng rng = make_rng(options.seed, "placement", static_cast<std::uint64_t>(k));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    RevenueCache cache(instance);
    // With k = 1 every draw is the same placement.
    const int draws = k == 1 ? 1 : options.repetitions;
    Candidate best;
    for (int r = 0; r < draws; ++r) {
      std::vector<ProductId> slots(static_cast<std::size_t>(m));
      for (auto& slot : slots) slot = pool[pick(rng)];
      Placement x(std::move(slots));
      double w = 0.0;
      if (exact) {
        w = evaluate_on_support(support, x, cache);
      } else {
        const std::uint64_t index = static_cast<std::uint64_t>(k) * 1000003ull +
                                    static_cast<std::uint64_t>(r);
        w = estimate_w(instance, x, *plan, derive_seed(options.seed, "estimation", index))
                .value;
      }
      if (!best.set || improves(w, best.value)) best = {std::move(x), w, k, true};
    }
    per_k[idx] = std::move(best);
  });

  Candidate best;
  for (auto& c : per_k) {
    if (!best.set || improves(c.value, best.value)) best = std::move(c);
  }
  SolveReport report;
  report.algorithm = "randomized";
  report.placement = std::move(best.placement);
  if (exact) {
    report.w_exact = best.value;
  } else {
    report.w_estimate = EstimateSummary{best.value, plan->epsilon, plan->delta, plan->samples};
  }
  report.k = best.k;
  report.seed = options.seed;
  report.ms = clock.ms();
  return report;
}

Placement partition_matroid_greedy(const Instance& instance, const Assortment& candidates,
                                   RevenueCache& cache) {
  const std::vector<WeightedLocations> support = instance.browsing().enumerate();
  Placement x = Placement::empty(instance.m());
  if (candidates.empty()) return x;
  for (int step = 0; step < instance.m(); ++step) {
    ProductId best_product = kEmptySlot;
    LocationId best_location = -1;
    double best_value = 0.0;
    for (ProductId p : candidates) {
      for (LocationId j = 0; j < instance.m(); ++j) {
        if (x[j] != kEmptySlot) continue;
        x[j] = p;
        const double w = evaluate_on_support(support, x, cache);
        x[j] = kEmptySlot;
        if (best_location < 0 || improves(w, best_value)) {
          best_product = p;
          best_location = j;
          best_value = w;
        }
      }
    }
    x[best_location] = best_product;
  }
  return x;
}

SolveReport uniform_price_matroid_greedy(const Instance& instance) {
  const Stopwatch clock;
  if (!instance.uniform_prices()) {
    throw ContractError("uniform-greedy requires identical prices");
  }
  const std::vector<WeightedLocations> support = require_support(instance, "uniform-greedy");
  RevenueCache cache(instance);
  std::vector<ProductId> all(static_cast<std::size_t>(instance.n()));
  for (ProductId p = 0; p < instance.n(); ++p) all[p] = p;
  Placement x = fill_empty(instance, partition_matroid_greedy(instance, Assortment(all), cache));

  SolveReport report;
  report.algorithm = "uniform-greedy";
  report.w_exact = evaluate_on_support(support, x, cache);
  report.placement = std::move(x);
  report.ms = clock.ms();
  return report;
}

SolveReport markov_deterministic_placement(const Instance& instance,
                                           const AssortmentOracle& oracle) {
  const Stopwatch clock;
  const ChoiceKind kind = instance.choice_model().kind();
  if (kind != ChoiceKind::kMarkov && kind != ChoiceKind::kMnl) {
    throw ContractError("markov-greedy requires a Markov or MNL choice model");
  }
  const std::vector<WeightedLocations> support = require_support(instance, "markov-greedy");
  RevenueCache cache(instance);
  Candidate best;
  for (int k = 1; k <= instance.m(); ++k) {
    const Assortment reduced = oracle.best_assortment(k).members;
    Placement x = fill_empty(instance, partition_matroid_greedy(instance, reduced, cache));
    const double w = evaluate_on_support(support, x, cache);
    if (!best.set || improves(w, best.value)) best = {std::move(x), w, k, true};
  }
  SolveReport report;
  report.algorithm = "markov-greedy";
  report.placement = std::move(best.placement);
  report.w_exact = best.value;
  report.k = best.k;
  report.ms = clock.ms();
  return report;
}

AssortmentOracle make_oracle(const Instance& instance, std::string_view name) {
  if (name != "auto") return AssortmentOracle(instance, parse_oracle_kind(name));
  if (instance.n() <= kBruteForceMaxProducts) {
    return AssortmentOracle(instance, OracleKind::kBruteForce);
  }
  if (instance.choice_model().kind() == ChoiceKind::kMnl) {
    return AssortmentOracle(instance, OracleKind::kMnlExact);
  }
  if (instance.uniform_prices()) return AssortmentOracle(instance, OracleKind::kGreedyUniform);
  throw ContractError("no assortment oracle applies to this instance; name one explicitly");
}

SolveReport solve_named(const Instance& instance, std::string_view algorithm,
                        std::string_view oracle, const RandomizedOptions& options) {
  if (algorithm == "brute") return brute_force_placement(instance);
  if (algorithm == "uniform-greedy") return uniform_price_matroid_greedy(instance);
  if (algorithm == "best-of-many") return best_of_many_line(instance, make_oracle(instance, oracle));
  if (algorithm == "markov-greedy") {
    return markov_deterministic_placement(instance, make_oracle(instance, oracle));
  }
  if (algorithm == "randomized") {
    return randomized_placement(instance, make_oracle(instance, oracle), options);
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(algorithm) + "'");
}

}  // namespace placement
