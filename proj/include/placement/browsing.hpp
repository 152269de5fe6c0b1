#pragma once

#include <functional>
#include <random>
#include <variant>
#include <vector>

#include "placement/types.hpp"

namespace placement {

using Rng = std::mt19937_64;

struct WeightedLocations {
  LocationSet locations;
  double prob = 0.0;
};

/// Distribution given by its full support. Duplicate sets are merged and
/// the support is kept in canonical (sorted) order.
class ExplicitBrowsing {
 public:
  ExplicitBrowsing(int m, std::vector<WeightedLocations> support);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const std::vector<WeightedLocations>& support() const { return support_; }

 private:
  int m_;
  std::vector<WeightedLocations> support_;
};

/// Customers visit the prefix {0..j-1} with probability theta[j-1]. Mass
/// left over (1 - sum theta) visits nothing.
class LineBrowsing {
 public:
  explicit LineBrowsing(std::vector<double> theta);

  [[nodiscard]] int m() const { return static_cast<int>(theta_.size()); }
  [[nodiscard]] const std::vector<double>& theta() const { return theta_; }
  [[nodiscard]] double residual() const { return residual_; }

 private:
  std::vector<double> theta_;
  double residual_ = 0.0;
};

/// Plug-in distribution known only through i.i.d. draws.
class SamplerBrowsing {
 public:
  using Generator = std::function<LocationSet(Rng&)>;
  SamplerBrowsing(int m, Generator generator);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] LocationSet draw(Rng& rng) const;

 private:
  int m_;
  Generator generator_;
};

class Browsing {
 public:
  using Variant = std::variant<ExplicitBrowsing, LineBrowsing, SamplerBrowsing>;

  Browsing(ExplicitBrowsing b) : model_(std::move(b)) {}  // NOLINT
  Browsing(LineBrowsing b) : model_(std::move(b)) {}      // NOLINT
  Browsing(SamplerBrowsing b) : model_(std::move(b)) {}   // NOLINT

  [[nodiscard]] int m() const;
  [[nodiscard]] const Variant& variant() const { return model_; }
  [[nodiscard]] bool is_line() const { return std::holds_alternative<LineBrowsing>(model_); }
  [[nodiscard]] bool enumerable() const {
    return !std::holds_alternative<SamplerBrowsing>(model_);
  }

  /// Full support with probabilities. Line browsing yields the m prefixes
  /// followed by the empty set when there is residual mass. Throws
  /// UnsupportedOperation for sampler-only distributions.
  [[nodiscard]] std::vector<WeightedLocations> enumerate() const;

  [[nodiscard]] LocationSet sample(Rng& rng) const;

 private:
  Variant model_;
};

/// P({j}) = 1/m for every location. Throws std::domain_error for m < 1.
ExplicitBrowsing singleton_uniform(int m);

/// All m locations are always visited, so W(X) = R(X(G)).
ExplicitBrowsing full_support(int m);

}  // namespace placement
