#pragma once

#include <vector>

#include "placement/instance.hpp"
#include "placement/instances.hpp"

namespace testing_helpers {

inline placement::Instance mnl_line(std::vector<double> prices, std::vector<double> weights,
                                    std::vector<double> theta) {
  const int m = static_cast<int>(theta.size());
  return placement::Instance(placement::make_products(prices),
                             placement::ChoiceModel(placement::MnlModel{std::move(weights)}), m,
                             placement::Browsing(placement::LineBrowsing(std::move(theta))));
}

inline placement::Instance random_instance(int n, int m, placement::ModelFamily model,
                                           placement::BrowsingFamily browsing,
                                           std::uint64_t seed, double price_min = 1.0,
                                           double price_max = 10.0) {
  placement::RandomInstanceOptions opt;
  opt.n = n;
  opt.m = m;
  opt.model = model;
  opt.browsing = browsing;
  opt.seed = seed;
  opt.price_min = price_min;
  opt.price_max = price_max;
  return placement::gen_random(opt);
}

inline constexpr placement::ModelFamily kAllModels[] = {
    placement::ModelFamily::kMnl, placement::ModelFamily::kMarkov,
    placement::ModelFamily::kMmnl, placement::ModelFamily::kRanked};

}  // namespace testing_helpers
