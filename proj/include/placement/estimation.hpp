#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "placement/instance.hpp"
#include "placement/types.hpp"

namespace placement {

/// Monte-Carlo budget. With `samples` = ceil(m^2 ln(1/delta) / (2 eps^2)),
/// |W_hat - W| <= eps * OPT holds with probability >= 1 - 2 delta.
struct EstimationPlan {
  double epsilon = 0.1;
  double delta = 0.05;
  std::int64_t samples = 1;
  // Upper bound on a single sample's revenue (max price).
  double revenue_bound = 0.0;
};

/// ceil(m^2 ln(1/delta) / (2 eps^2)). Throws std::domain_error unless
/// m >= 1 and eps, delta in (0, 1].
std::int64_t sample_size(int m, double epsilon, double delta);

/// Per-candidate count so that all `candidates` estimates are eps-accurate
/// simultaneously (union bound, delta split over the candidates):
/// ceil(m^2 ln(candidates/delta) / (2 eps^2)).
std::int64_t sample_size_for_candidates(int m, double epsilon, double delta,
                                        std::size_t candidates);

/// Plan for `instance`. `samples_override` replaces the computed count;
/// `candidates` > 1 applies the union-bound count.
EstimationPlan make_plan(const Instance& instance, double epsilon, double delta,
                         std::optional<std::int64_t> samples_override = std::nullopt,
                         std::size_t candidates = 1);

struct Estimate {
  double value = 0.0;
  std::int64_t samples = 0;
  double std_error = 0.0;  // sample standard deviation / sqrt(T)
};

// Samples per independently seeded block.
inline constexpr std::int64_t kEstimationBlock = 1024;

/// W_hat = (1/T) sum_t R(X(L_t)) over T i.i.d. browsing draws. Each sample
/// contributes the exact expected revenue of the visited products. Draws
/// are split into blocks of kEstimationBlock with per-block sub-streams of
/// `seed`, so the result is identical for any thread count.
Estimate estimate_w(const Instance& instance, const Placement& placement,
                    const EstimationPlan& plan, std::uint64_t seed);

struct Selection {
  std::size_t index = 0;
  std::vector<double> estimates;
};

/// argmax of W_hat over the candidates (lowest index on ties). Throws
/// std::domain_error for an empty candidate list.
Selection select_best(const Instance& instance, std::span<const Placement> candidates,
                      const EstimationPlan& plan, std::uint64_t seed);

}  // namespace placement
