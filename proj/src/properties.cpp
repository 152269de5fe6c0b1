#include "placement/properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "placement/errors.hpp"
#include "placement/evaluation.hpp"

namespace placement {
namespace {

constexpr std::size_t kMaxExamples = 5;

std::string mask_string(std::uint32_t mask) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int b = 0; mask >> b; ++b) {
    if (!((mask >> b) & 1u)) continue;
    out << (first ? "" : ",") << b;
    first = false;
  }
  out << '}';
  return out.str();
}

void record(SetFunctionCheck& check, double magnitude, std::string text) {
  check.worst = std::max(check.worst, magnitude);
  if (check.examples.size() < kMaxExamples) check.examples.push_back(std::move(text));
}

}  // namespace

SetFunctionCheck check_monotone_submodular(int ground_size, const SetFunction& f,
                                           double tolerance) {
  if (ground_size < 0 || ground_size > kMaxExhaustiveGround) {
    throw SizeGuardError("exhaustive submodularity check limited to " +
                         std::to_string(kMaxExhaustiveGround) + " ground elements");
  }
  const std::uint32_t full = (std::uint32_t{1} << ground_size) - 1;
  std::vector<double> value(static_cast<std::size_t>(full) + 1);
  double scale = 1.0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    value[s] = f(s);
    scale = std::max(scale, std::abs(value[s]));
  }
  const double tol = tolerance * scale;

  SetFunctionCheck check;
  for (std::uint32_t v = 0; v <= full; ++v) {
    for (int e = 0; e < ground_size; ++e) {
      const std::uint32_t bit = std::uint32_t{1} << e;
      if (v & bit) continue;
      const double gain_v = value[v | bit] - value[v];
      if (gain_v < -tol) {
        ++check.monotone_violations;
        record(check, -gain_v,
               "f(" + mask_string(v | bit) + ") < f(" + mask_string(v) + ")");
      }
      // Proper subsets U of V.
      for (std::uint32_t u = (v - 1) & v;; u = (u - 1) & v) {
        if (u != v) {
          const double gain_u = value[u | bit] - value[u];
          if (gain_v - gain_u > tol) {
            ++check.submodular_violations;
            record(check, gain_v - gain_u,
                   "gain of " + std::to_string(e) + " at " + mask_string(v) + " exceeds gain at " +
                       mask_string(u));
          }
        }
        if (u == 0) break;
      }
    }
  }
  return check;
}

SetFunctionCheck check_pair_objective(const Instance& instance, double tolerance) {
  const int n = instance.n();
  const int m = instance.m();
  if (n * m > kMaxExhaustiveGround) {
    throw SizeGuardError("pair objective check limited to n * m <= " +
                         std::to_string(kMaxExhaustiveGround));
  }
  RevenueCache cache(instance);
  return check_monotone_submodular(
      n * m,
      [&](std::uint32_t mask) {
        std::vector<GroundPair> pairs;
        for (int b = 0; b < n * m; ++b) {
          if ((mask >> b) & 1u) pairs.push_back({b / m, b % m});
        }
        return pair_set_objective(instance, pairs, cache);
      },
      tolerance);
}

SetFunctionCheck check_revenue_on(const Instance& instance, const Assortment& ground,
                                  double tolerance) {
  const std::span<const ProductId> ids = ground.ids();
  return check_monotone_submodular(
      static_cast<int>(ids.size()),
      [&](std::uint32_t mask) {
        std::vector<ProductId> subset;
        for (std::size_t b = 0; b < ids.size(); ++b) {
          if ((mask >> b) & 1u) subset.push_back(ids[b]);
        }
        return instance.revenue(Assortment(std::move(subset)));
      },
      tolerance);
}

std::vector<HighestPriceViolation> check_highest_price_addition(const Instance& instance,
                                                                double tolerance) {
  const int n = instance.n();
  if (n > 20) throw SizeGuardError("highest-price addition check limited to n <= 20");
  const ProductId top = instance.highest_price_product();
  std::vector<HighestPriceViolation> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if ((mask >> top) & 1u) continue;
    const Assortment s = Assortment::from_mask(mask);
    const double loss = instance.revenue(s) - instance.revenue(s.with(top));
    if (loss > tolerance * std::max(1.0, instance.max_price())) out.push_back({s, loss});
  }
  return out;
}

}  // namespace placement
