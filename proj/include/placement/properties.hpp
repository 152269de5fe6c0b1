#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "placement/instance.hpp"
#include "placement/types.hpp"

namespace placement {

/// Outcome of an exhaustive monotonicity / submodularity check.
struct SetFunctionCheck {
  std::int64_t monotone_violations = 0;
  std::int64_t submodular_violations = 0;
  double worst = 0.0;  // largest violation magnitude seen
  std::vector<std::string> examples;  // first few violations, human readable

  [[nodiscard]] bool ok() const { return monotone_violations == 0 && submodular_violations == 0; }
};

using SetFunction = std::function<double(std::uint32_t mask)>;

// Largest ground set the exhaustive U <= V enumeration accepts (3^14 pairs).
inline constexpr int kMaxExhaustiveGround = 14;

/// Checks f(V + e) >= f(V) and f(U + e) - f(U) >= f(V + e) - f(V) for every
/// U <= V and e outside V, over a ground set of `ground_size` elements
/// encoded as bit masks. A difference counts as a violation when it exceeds
/// `tolerance` * max(1, max |f|). Throws SizeGuardError past
/// kMaxExhaustiveGround.
SetFunctionCheck check_monotone_submodular(int ground_size, const SetFunction& f,
                                           double tolerance = 1e-10);

/// The placement objective over sets of (product, location) pairs, pair
/// (p, j) encoded as bit p * m + j.
SetFunctionCheck check_pair_objective(const Instance& instance, double tolerance = 1e-10);

/// R restricted to subsets of `ground` (typically an optimal S*_k).
SetFunctionCheck check_revenue_on(const Instance& instance, const Assortment& ground,
                                  double tolerance = 1e-10);

struct HighestPriceViolation {
  Assortment assortment;
  double loss = 0.0;  // R(S) - R(S + i*) > 0
};

/// R(S + i*) >= R(S) for every S not containing i*. Exhaustive; throws
/// SizeGuardError for n > 20.
std::vector<HighestPriceViolation> check_highest_price_addition(const Instance& instance,
                                                                double tolerance = 1e-12);

}  // namespace placement
