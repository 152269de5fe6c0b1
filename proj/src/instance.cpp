#include "placement/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace placement {

Instance::Instance(std::vector<Product> products, ChoiceModel model, int m,
                   Browsing browsing)
    : products_(std::move(products)),
      model_(std::move(model)),
      m_(m),
      browsing_(std::move(browsing)) {
  if (products_.empty()) throw std::invalid_argument("instance: need at least one product");
  if (m_ < 1) throw std::invalid_argument("instance: need at least one location");
  prices_.reserve(products_.size());
  for (std::size_t k = 0; k < products_.size(); ++k) {
    const Product& p = products_[k];
    if (p.id != static_cast<ProductId>(k)) {
      throw std::invalid_argument("instance: product ids must be dense 0..n-1 in order");
    }
    if (!std::isfinite(p.price) || p.price < 0.0) {
      throw std::invalid_argument("instance: product " + std::to_string(k) +
                                  " has a negative price");
    }
    prices_.push_back(p.price);
    if (p.price > prices_[i_star_]) i_star_ = p.id;
  }
  if (model_.num_products() != n()) {
    throw std::invalid_argument("instance: choice model has " +
                                std::to_string(model_.num_products()) +
                                " products, catalog has " + std::to_string(n()));
  }
  if (browsing_.m() != m_) {
    throw std::invalid_argument("instance: browsing covers " +
                                std::to_string(browsing_.m()) + " locations, m = " +
                                std::to_string(m_));
  }
}

bool Instance::uniform_prices() const {
  const double first = prices_.front();
  for (double r : prices_) {
    if (std::abs(r - first) > 1e-12 * std::max(1.0, std::abs(first))) return false;
  }
  return true;
}

std::vector<Product> make_products(std::span<const double> prices) {
  std::vector<Product> out;
  out.reserve(prices.size());
  for (std::size_t k = 0; k < prices.size(); ++k) {
    out.push_back({static_cast<ProductId>(k), prices[k]});
  }
  return out;
}

}  // namespace placement
