#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "placement/instance.hpp"
#include "placement/types.hpp"

namespace placement {

/// Memoized R(S) for one instance. Not thread-safe: give each thread (or
/// each independent work item) its own cache.
class RevenueCache {
 public:
  explicit RevenueCache(const Instance& instance) : instance_(&instance) {}

  double operator()(const Assortment& s);
  [[nodiscard]] std::size_t size() const { return memo_.size(); }

 private:
  const Instance* instance_;
  std::unordered_map<Assortment, double, IdSetHash> memo_;
};

/// Throws std::invalid_argument unless the placement has m slots holding
/// valid product ids (or kEmptySlot when `allow_empty`).
void validate_placement(const Instance& instance, const Placement& placement,
                        bool allow_empty);

/// W(X) = sum_L P_B(L) R(X(L)). Empty slots contribute nothing. Throws
/// UnsupportedOperation when the browsing distribution cannot be enumerated.
double evaluate_exact(const Instance& instance, const Placement& placement);
double evaluate_exact(const Instance& instance, const Placement& placement,
                      RevenueCache& cache);

/// W(X) over a pre-enumerated support; avoids re-enumerating inside
/// solver loops. No placement validation.
double evaluate_on_support(std::span<const WeightedLocations> support,
                           const Placement& placement, RevenueCache& cache);

/// Replaces every empty slot with the highest-price product i*.
Placement fill_empty(const Instance& instance, Placement partial);

/// Element (product, location) of the expanded ground set N x G.
struct GroundPair {
  ProductId product = 0;
  LocationId location = 0;

  friend bool operator==(const GroundPair&, const GroundPair&) = default;
};

/// W(U) = sum_L P_B(L) R(union_{j in L} U(j)) for an arbitrary pair set,
/// where U(j) collects every product paired with location j.
double pair_set_objective(const Instance& instance, std::span<const GroundPair> pairs,
                          RevenueCache& cache);

}  // namespace placement
