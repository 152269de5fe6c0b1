#include "placement/types.hpp"

#include <stdexcept>
#include <string>

namespace placement {

Assortment products_at(const Placement& placement, const LocationSet& locations) {
  std::vector<ProductId> ids;
  ids.reserve(locations.size());
  for (LocationId j : locations) {
    if (j < 0 || j >= placement.m()) {
      throw std::out_of_range("location " + std::to_string(j) +
                              " outside placement of " +
                              std::to_string(placement.m()) + " slots");
    }
    if (placement[j] != kEmptySlot) ids.push_back(placement[j]);
  }
  return Assortment(std::move(ids));
}

}  // namespace placement
