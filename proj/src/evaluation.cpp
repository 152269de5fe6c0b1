#include "placement/evaluation.hpp"

#include <stdexcept>
#include <string>

namespace placement {

double RevenueCache::operator()(const Assortment& s) {
  if (s.empty()) return 0.0;
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  const double r = instance_->revenue(s);
  memo_.emplace(s, r);
  return r;
}

void validate_placement(const Instance& instance, const Placement& placement,
                        bool allow_empty) {
  if (placement.m() != instance.m()) {
    throw std::invalid_argument("placement has " + std::to_string(placement.m()) +
                                " slots, instance has m = " + std::to_string(instance.m()));
  }
  for (ProductId p : placement.slots()) {
    if (p == kEmptySlot && allow_empty) continue;
    if (p < 0 || p >= instance.n()) {
      throw std::invalid_argument("placement holds invalid product id " + std::to_string(p));
    }
  }
}

double evaluate_exact(const Instance& instance, const Placement& placement,
                      RevenueCache& cache) {
  validate_placement(instance, placement, /*allow_empty=*/true);
  const std::vector<WeightedLocations> support = instance.browsing().enumerate();
  return evaluate_on_support(support, placement, cache);
}

double evaluate_on_support(std::span<const WeightedLocations> support,
                           const Placement& placement, RevenueCache& cache) {
  double w = 0.0;
  for (const auto& [locations, prob] : support) {
    if (prob == 0.0) continue;
    w += prob * cache(products_at(placement, locations));
  }
  return w;
}

double evaluate_exact(const Instance& instance, const Placement& placement) {
  RevenueCache cache(instance);
  return evaluate_exact(instance, placement, cache);
}

Placement fill_empty(const Instance& instance, Placement partial) {
  validate_placement(instance, partial, /*allow_empty=*/true);
  for (LocationId j = 0; j < partial.m(); ++j) {
    if (partial[j] == kEmptySlot) partial[j] = instance.highest_price_product();
  }
  return partial;
}

double pair_set_objective(const Instance& instance, std::span<const GroundPair> pairs,
                          RevenueCache& cache) {
  std::vector<std::vector<ProductId>> by_location(static_cast<std::size_t>(instance.m()));
  for (const GroundPair& e : pairs) {
    if (e.location < 0 || e.location >= instance.m() || e.product < 0 ||
        e.product >= instance.n()) {
      throw std::out_of_range("ground pair outside N x G");
    }
    by_location[e.location].push_back(e.product);
  }
  double w = 0.0;
  for (const auto& [locations, prob] : instance.browsing().enumerate()) {
    if (prob == 0.0) continue;
    std::vector<ProductId> ids;
    for (LocationId j : locations) {
      ids.insert(ids.end(), by_location[j].begin(), by_location[j].end());
    }
    w += prob * cache(Assortment(std::move(ids)));
  }
  return w;
}

}  // namespace placement
