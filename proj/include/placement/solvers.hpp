#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "placement/assortment_oracle.hpp"
#include "placement/evaluation.hpp"
#include "placement/instance.hpp"
#include "placement/seeding.hpp"
#include "placement/types.hpp"

namespace placement {

struct EstimateSummary {
  double value = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::int64_t samples = 0;
};

/// Result of one solver run. Exactly one of `w_exact` / `w_estimate` is set
/// and the placement has no empty slots.
struct SolveReport {
  std::string algorithm;
  Placement placement;
  std::optional<double> w_exact;
  std::optional<EstimateSummary> w_estimate;
  std::optional<int> k;  // winning cardinality for best-over-k solvers
  std::uint64_t seed = 0;
  std::int64_t ms = 0;

  [[nodiscard]] double value() const {
    return w_exact ? *w_exact : w_estimate ? w_estimate->value : 0.0;
  }
};

// Largest n^m the exhaustive placement search accepts.
inline constexpr double kBruteForceMaxPlacements = 2e6;

/// Exhaustive search over all n^m placements. Throws SizeGuardError past
/// kBruteForceMaxPlacements and UnsupportedOperation for sampler browsing.
SolveReport brute_force_placement(const Instance& instance);

/// Best of Many on a line: X*_k puts S*_k (ascending id) in the first k
/// slots and i* elsewhere; returns the best X*_k. Throws ContractError if the
/// browsing distribution is not a line.
SolveReport best_of_many_line(const Instance& instance, const AssortmentOracle& oracle);

struct RandomizedOptions {
  int repetitions = 32;
  std::uint64_t seed = kDefaultSeed;
  // Used only when the browsing distribution can just be sampled.
  double epsilon = 0.1;
  double delta = 0.05;
  std::optional<std::int64_t> samples_override;
};

/// For every k in [m], draws `repetitions` placements that fill each slot
/// independently and uniformly from the k entries of S*_k, and returns the
/// best draw overall. Values are exact when the browsing distribution is
/// enumerable and Monte-Carlo estimates otherwise.
SolveReport randomized_placement(const Instance& instance, const AssortmentOracle& oracle,
                                 const RandomizedOptions& options = {});

/// Greedy over the partition matroid on `candidates` x G: repeatedly adds
/// the (product, free location) pair with the largest gain in W until every
/// location holds a product. Ties go to the lower product id, then the
/// lower location id.
Placement partition_matroid_greedy(const Instance& instance, const Assortment& candidates,
                                   RevenueCache& cache);

/// Matroid greedy on N x G for identically priced products.
SolveReport uniform_price_matroid_greedy(const Instance& instance);

/// For every k, matroid greedy restricted to S*_k x G, then the best k.
/// Requires a Markov (or MNL) choice model.
SolveReport markov_deterministic_placement(const Instance& instance,
                                           const AssortmentOracle& oracle);

/// Algorithm names accepted by solve_named, sorted.
inline constexpr std::string_view kAlgorithmNames[] = {"best-of-many", "brute", "markov-greedy",
                                                       "randomized", "uniform-greedy"};

/// Oracle by name. "auto" picks brute force for n <= 22, then the MNL
/// threshold search, then uniform greedy; ContractError if none applies.
AssortmentOracle make_oracle(const Instance& instance, std::string_view name);

/// Runs the named algorithm. `options` is used by randomized only. Throws
/// std::invalid_argument for unknown names.
SolveReport solve_named(const Instance& instance, std::string_view algorithm,
                        std::string_view oracle = "auto", const RandomizedOptions& options = {});

}  // namespace placement
