#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace placement {

using ProductId = int;
using LocationId = int;

// Marks an unfilled slot inside solver intermediates. Never present in a
// returned solution.
inline constexpr ProductId kEmptySlot = -1;

/// Sorted, duplicate-free set of small integer ids. `Tag` keeps product sets
/// and location sets from being mixed up.
template <class Tag>
class IdSet {
 public:
  using value_type = int;
  using const_iterator = std::vector<int>::const_iterator;

  IdSet() = default;
  IdSet(std::initializer_list<int> ids) : ids_(ids) { canonicalize(); }
  explicit IdSet(std::vector<int> ids) : ids_(std::move(ids)) { canonicalize(); }

  // Builds from a bitmask over ids [0, 32).
  static IdSet from_mask(std::uint32_t mask) {
    IdSet out;
    for (int b = 0; mask != 0; ++b, mask >>= 1) {
      if (mask & 1u) out.ids_.push_back(b);
    }
    return out;
  }

  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] const_iterator begin() const { return ids_.begin(); }
  [[nodiscard]] const_iterator end() const { return ids_.end(); }
  [[nodiscard]] std::span<const int> ids() const { return ids_; }
  [[nodiscard]] int operator[](std::size_t i) const { return ids_[i]; }

  [[nodiscard]] bool contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  [[nodiscard]] bool is_subset_of(const IdSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  [[nodiscard]] IdSet with(int id) const {
    IdSet out = *this;
    auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
    if (it == out.ids_.end() || *it != id) out.ids_.insert(it, id);
    return out;
  }

  [[nodiscard]] IdSet united(const IdSet& other) const {
    IdSet out;
    out.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }

  friend bool operator==(const IdSet&, const IdSet&) = default;
  friend auto operator<=>(const IdSet&, const IdSet&) = default;

 private:
  void canonicalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<int> ids_;
};

struct ProductTag {};
struct LocationTag {};

// A set of products offered together. The no-purchase option is implicit.
using Assortment = IdSet<ProductTag>;
using LocationSet = IdSet<LocationTag>;

struct IdSetHash {
  template <class Tag>
  std::size_t operator()(const IdSet<Tag>& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int id : s) {
      h ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

/// One product per display location; slot j holds the product shown there.
class Placement {
 public:
  Placement() = default;
  explicit Placement(std::vector<ProductId> slots) : slots_(std::move(slots)) {}
  static Placement empty(int m) {
    return Placement(std::vector<ProductId>(static_cast<std::size_t>(m), kEmptySlot));
  }

  [[nodiscard]] int m() const { return static_cast<int>(slots_.size()); }
  [[nodiscard]] ProductId operator[](LocationId j) const { return slots_[j]; }
  ProductId& operator[](LocationId j) { return slots_[j]; }
  [[nodiscard]] std::span<const ProductId> slots() const { return slots_; }
  [[nodiscard]] bool has_empty() const {
    return std::find(slots_.begin(), slots_.end(), kEmptySlot) != slots_.end();
  }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<ProductId> slots_;
};

/// Products shown at `locations` (duplicates collapse, empty slots skipped).
/// Throws std::out_of_range for a location index >= m.
Assortment products_at(const Placement& placement, const LocationSet& locations);

}  // namespace placement
