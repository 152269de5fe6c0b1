#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "placement/instance.hpp"
#include "placement/types.hpp"

namespace placement {

/// Line instance with a single visited slot (theta = [1, 0, ..., 0]) and
/// m = k. Products 0..k-1 form U (price k, MNL weight 1/k); product k is q
/// (price k/2, weight 1). Throws std::domain_error for k < 1.
Instance gen_lemma_single_1(int k);

/// Line instance with theta_j = 1/m and m products of price m and weight
/// 1/m. Throws std::domain_error for m < 1.
Instance gen_lemma_single_2(int m);

/// Heavy-tailed MNL line instance with product groups of geometrically
/// shrinking weight.
///
/// Group j (1 <= j <= m) holds j products of weight eps/j. A single
/// u-product of weight 1/(j ln^{1+eps} j) exists for 2 <= j <= m. Every
/// price is w^{-1/(1+eps)} for its weight w. Location j is visited with
/// probability proportional to j^{-s}, s = 1 + 1/(1+eps), scaled by 1/zeta(s)
/// so the line masses sum below one.
struct HeavyTailInstance {
  Instance instance;
  // groups[j-1] are the ids of the j products of weight eps/j.
  std::vector<std::vector<ProductId>> groups;
  // u_products[j-2] is the id of u_j.
  std::vector<ProductId> u_products;
};

/// Throws std::domain_error unless m >= 2 and eps > 0.
HeavyTailInstance gen_instance_i(int m, double epsilon);

/// u_j at location j for j >= 2 and u_2 also at location 1.
Placement heavy_tail_u_placement(const HeavyTailInstance& h);

/// MMNL instance built from a coverage problem over the universe [0, q).
/// Product i is set i; customer segment j (mass 1/q) has weight
/// M = 1/eps - 1 for every set containing j and 0 otherwise. Prices are 1
/// and all K locations are always visited.
/// Throws std::domain_error for q < 1, eps outside (0, 1), K outside
/// [1, sets.size()] or an element outside [0, q).
Instance gen_max_coverage_mmnl(const std::vector<std::vector<int>>& sets, int q, int k,
                               double epsilon);

/// (1/q) sum_j g_j M / (1 + g_j M) where g_j counts chosen sets covering j.
double coverage_revenue(const std::vector<std::vector<int>>& sets, int q, double epsilon,
                        const Assortment& chosen);

enum class ModelFamily { kMnl, kMarkov, kMmnl, kRanked };
enum class BrowsingFamily { kLine, kExplicit, kSingleton, kFull };

std::string_view to_string(ModelFamily family);
std::string_view to_string(BrowsingFamily family);
// Throw std::invalid_argument for unknown names.
ModelFamily parse_model_family(std::string_view name);
BrowsingFamily parse_browsing_family(std::string_view name);

struct RandomInstanceOptions {
  int n = 5;
  int m = 3;
  ModelFamily model = ModelFamily::kMnl;
  double price_min = 1.0;
  double price_max = 10.0;
  BrowsingFamily browsing = BrowsingFamily::kLine;
  std::uint64_t seed = 0;
  // Largest support drawn for explicit browsing.
  int max_support = 8;
};

/// Reproducible random instance. Markov rows are Dirichlet(1) with the
/// no-purchase state forced absorbing; MMNL uses 2-3 segments; ranked lists
/// are random prefixes of random permutations. Throws std::domain_error for
/// n, m < 1 or an empty / negative price range.
Instance gen_random(const RandomInstanceOptions& options);

}  // namespace placement
