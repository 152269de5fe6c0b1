#include "placement/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "placement/evaluation.hpp"
#include "placement/parallel.hpp"
#include "placement/seeding.hpp"

namespace placement {
namespace {

void check_accuracy(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::domain_error("estimation: epsilon must lie in (0, 1]");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::domain_error("estimation: delta must lie in (0, 1]");
  }
}

std::int64_t hoeffding_count(int m, double epsilon, double log_term) {
  const double exact = static_cast<double>(m) * m * log_term / (2.0 * epsilon * epsilon);
  // Absorb rounding in log/divide so exact integers are not bumped up.
  const auto count = static_cast<std::int64_t>(std::ceil(exact * (1.0 - 1e-12)));
  return std::max<std::int64_t>(1, count);
}

struct BlockSum {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

std::int64_t sample_size(int m, double epsilon, double delta) {
  return sample_size_for_candidates(m, epsilon, delta, 1);
}

std::int64_t sample_size_for_candidates(int m, double epsilon, double delta,
                                        std::size_t candidates) {
  if (m < 1) throw std::domain_error("estimation: m must be >= 1");
  check_accuracy(epsilon, delta);
  if (candidates < 1) throw std::domain_error("estimation: need at least one candidate");
  return hoeffding_count(m, epsilon,
                         std::log(static_cast<double>(candidates)) - std::log(delta));
}

EstimationPlan make_plan(const Instance& instance, double epsilon, double delta,
                         std::optional<std::int64_t> samples_override,
                         std::size_t candidates) {
  check_accuracy(epsilon, delta);
  EstimationPlan plan;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.revenue_bound = instance.max_price();
  if (samples_override) {
    if (*samples_override < 1) throw std::domain_error("estimation: sample override must be >= 1");
    plan.samples = *samples_override;
  } else {
    plan.samples = sample_size_for_candidates(instance.m(), epsilon, delta, candidates);
  }
  return plan;
}

Estimate estimate_w(const Instance& instance, const Placement& placement,
                    const EstimationPlan& plan, std::uint64_t seed) {
  validate_placement(instance, placement, /*allow_empty=*/true);
  if (plan.samples < 1) throw std::domain_error("estimation: plan needs at least one sample");

  const std::int64_t blocks = (plan.samples + kEstimationBlock - 1) / kEstimationBlock;
  std::vector<BlockSum> sums(static_cast<std::size_t>(blocks));
  parallel_for(sums.size(), [&](std::size_t b) {
    Rng rng = make_rng(seed, "estimation", b);
    RevenueCache cache(instance);
    const std::int64_t begin = static_cast<std::int64_t>(b) * kEstimationBlock;
    const std::int64_t end = std::min(plan.samples, begin + kEstimationBlock);
    BlockSum acc;
    for (std::int64_t t = begin; t < end; ++t) {
      const LocationSet visited = instance.browsing().sample(rng);
      const double y = cache(products_at(placement, visited));
      acc.sum += y;
      acc.sum_sq += y * y;
    }
    sums[b] = acc;
  });

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const BlockSum& b : sums) {
    sum += b.sum;
    sum_sq += b.sum_sq;
  }
  const auto t = static_cast<double>(plan.samples);
  Estimate out;
  out.samples = plan.samples;
  out.value = std::clamp(sum / t, 0.0, instance.max_price());
  if (plan.samples > 1) {
    const double var = std::max(0.0, (sum_sq - sum * sum / t) / (t - 1.0));
    out.std_error = std::sqrt(var / t);
  }
  return out;
}

Selection select_best(const Instance& instance, std::span<const Placement> candidates,
                      const EstimationPlan& plan, std::uint64_t seed) {
  if (candidates.empty()) throw std::domain_error("select_best: no candidates");
  Selection out;
  out.estimates.reserve(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    out.estimates.push_back(
        estimate_w(instance, candidates[c], plan, derive_seed(seed, "candidate", c)).value);
    if (out.estimates[c] > out.estimates[out.index]) out.index = c;
  }
  return out;
}

}  // namespace placement
