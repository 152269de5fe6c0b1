#pragma once

#include <span>
#include <vector>

#include "placement/browsing.hpp"
#include "placement/choice_model.hpp"
#include "placement/types.hpp"

namespace placement {

struct Product {
  ProductId id = 0;
  double price = 0.0;  // r_i >= 0
};

/// A complete placement problem: catalog, choice model, m locations and the
/// browsing distribution over them.
class Instance {
 public:
  // Throws std::invalid_argument when ids are not dense 0..n-1, a price is
  // negative, or the model / browsing disagree with n and m.
  Instance(std::vector<Product> products, ChoiceModel model, int m, Browsing browsing);

  [[nodiscard]] int n() const { return static_cast<int>(products_.size()); }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const std::vector<Product>& products() const { return products_; }
  [[nodiscard]] std::span<const double> prices() const { return prices_; }
  [[nodiscard]] const ChoiceModel& choice_model() const { return model_; }
  [[nodiscard]] const Browsing& browsing() const { return browsing_; }

  /// i* = argmax_i r_i, lowest id on ties.
  [[nodiscard]] ProductId highest_price_product() const { return i_star_; }
  [[nodiscard]] double max_price() const { return prices_[i_star_]; }
  [[nodiscard]] bool uniform_prices() const;

  [[nodiscard]] double revenue(const Assortment& s) const {
    return model_.revenue(prices_, s);
  }

 private:
  std::vector<Product> products_;
  std::vector<double> prices_;
  ChoiceModel model_;
  int m_;
  Browsing browsing_;
  ProductId i_star_ = 0;
};

/// Catalog with ids 0..n-1 and the given prices.
std::vector<Product> make_products(std::span<const double> prices);

}  // namespace placement
