#include "placement/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "placement/seeding.hpp"

namespace placement {
namespace {

Instance mnl_line_instance(const std::vector<double>& prices, std::vector<double> weights,
                           std::vector<double> theta) {
  const int m = static_cast<int>(theta.size());
  return Instance(make_products(prices), ChoiceModel(MnlModel{std::move(weights)}), m,
                  Browsing(LineBrowsing(std::move(theta))));
}

// Dirichlet(1, ..., 1) via normalized exponentials.
std::vector<double> dirichlet(Rng& rng, std::size_t size) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> out(size);
  double total = 0.0;
  for (double& x : out) {
    x = expo(rng);
    total += x;
  }
  for (double& x : out) x /= total;
  return out;
}

std::vector<double> random_weights(Rng& rng, int n) {
  std::uniform_real_distribution<double> dist(0.05, 2.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (double& x : w) x = dist(rng);
  return w;
}

ChoiceModel random_model(Rng& rng, int n, ModelFamily family) {
  switch (family) {
    case ModelFamily::kMnl:
      return ChoiceModel(MnlModel{random_weights(rng, n)});
    case ModelFamily::kMarkov: {
      const auto states = static_cast<std::size_t>(n) + 1;
      MarkovModel model;
      model.arrival = dirichlet(rng, states);
      model.transitions.assign(states, std::vector<double>(states, 0.0));
      model.transitions[0][0] = 1.0;
      for (std::size_t a = 1; a < states; ++a) model.transitions[a] = dirichlet(rng, states);
      return ChoiceModel(std::move(model));
    }
    case ModelFamily::kMmnl: {
      const int count = std::uniform_int_distribution<int>(2, 3)(rng);
      const std::vector<double> theta = dirichlet(rng, static_cast<std::size_t>(count));
      MmnlModel model;
      for (double t : theta) model.segments.push_back({t, random_weights(rng, n)});
      return ChoiceModel(std::move(model));
    }
    case ModelFamily::kRanked: {
      const int count = std::uniform_int_distribution<int>(2, 4)(rng);
      const std::vector<double> probs = dirichlet(rng, static_cast<std::size_t>(count));
      RankedListModel model;
      model.num_products = n;
      std::vector<int> alternatives(static_cast<std::size_t>(n));
      std::iota(alternatives.begin(), alternatives.end(), alternative_of(0));
      for (double p : probs) {
        std::shuffle(alternatives.begin(), alternatives.end(), rng);
        const int length = std::uniform_int_distribution<int>(1, n)(rng);
        model.lists.push_back({p, std::vector<int>(alternatives.begin(),
                                                   alternatives.begin() + length)});
      }
      return ChoiceModel(std::move(model));
    }
  }
  throw std::logic_error("unknown model family");
}

Browsing random_browsing(Rng& rng, int m, BrowsingFamily family, int max_support) {
  switch (family) {
    case BrowsingFamily::kLine: {
      // The last Dirichlet coordinate is the no-visit mass.
      std::vector<double> theta = dirichlet(rng, static_cast<std::size_t>(m) + 1);
      theta.pop_back();
      return LineBrowsing(std::move(theta));
    }
    case BrowsingFamily::kExplicit: {
      if (m > 30) throw std::domain_error("gen_random: explicit browsing supports m <= 30");
      const std::uint64_t nonempty = (std::uint64_t{1} << m) - 1;
      const auto size = static_cast<std::size_t>(std::min<std::uint64_t>(
          nonempty, static_cast<std::uint64_t>(std::max(1, max_support))));
      const std::size_t count = std::uniform_int_distribution<std::size_t>(1, size)(rng);
      std::uniform_int_distribution<std::uint32_t> mask_dist(1, static_cast<std::uint32_t>(nonempty));
      std::vector<std::uint32_t> masks;
      while (masks.size() < count) {
        const std::uint32_t mask = mask_dist(rng);
        if (std::find(masks.begin(), masks.end(), mask) == masks.end()) masks.push_back(mask);
      }
      const std::vector<double> probs = dirichlet(rng, count);
      std::vector<WeightedLocations> support;
      for (std::size_t i = 0; i < count; ++i) {
        support.push_back({LocationSet::from_mask(masks[i]), probs[i]});
      }
      return ExplicitBrowsing(m, std::move(support));
    }
    case BrowsingFamily::kSingleton:
      return singleton_uniform(m);
    case BrowsingFamily::kFull:
      return full_support(m);
  }
  throw std::logic_error("unknown browsing family");
}

}  // namespace

Instance gen_lemma_single_1(int k) {
  if (k < 1) throw std::domain_error("gen_lemma_single_1: k must be >= 1");
  const auto kd = static_cast<double>(k);
  std::vector<double> prices(static_cast<std::size_t>(k) + 1, kd);
  std::vector<double> weights(static_cast<std::size_t>(k) + 1, 1.0 / kd);
  prices.back() = kd / 2.0;
  weights.back() = 1.0;
  std::vector<double> theta(static_cast<std::size_t>(k), 0.0);
  theta[0] = 1.0;
  return mnl_line_instance(prices, std::move(weights), std::move(theta));
}

Instance gen_lemma_single_2(int m) {
  if (m < 1) throw std::domain_error("gen_lemma_single_2: m must be >= 1");
  const auto md = static_cast<double>(m);
  const auto size = static_cast<std::size_t>(m);
  return mnl_line_instance(std::vector<double>(size, md), std::vector<double>(size, 1.0 / md),
                           std::vector<double>(size, 1.0 / md));
}

HeavyTailInstance gen_instance_i(int m, double epsilon) {
  if (m < 2) throw std::domain_error("gen_instance_i: m must be >= 2");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::domain_error("gen_instance_i: epsilon must be > 0");
  }
  const double price_exponent = -1.0 / (1.0 + epsilon);
  std::vector<double> weights;
  std::vector<double> prices;
  auto add = [&](double w) {
    weights.push_back(w);
    prices.push_back(std::pow(w, price_exponent));
    return static_cast<ProductId>(weights.size() - 1);
  };

  std::vector<std::vector<ProductId>> groups(static_cast<std::size_t>(m));
  std::vector<ProductId> u_products;
  for (int j = 1; j <= m; ++j) {
    for (int c = 0; c < j; ++c) groups[j - 1].push_back(add(epsilon / j));
  }
  for (int j = 2; j <= m; ++j) {
    u_products.push_back(add(1.0 / (j * std::pow(std::log(static_cast<double>(j)), 1.0 + epsilon))));
  }

  const double s = 1.0 + 1.0 / (1.0 + epsilon);
  const double zeta = std::riemann_zeta(s);
  std::vector<double> theta(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) theta[j - 1] = std::pow(static_cast<double>(j), -s) / zeta;

  return {mnl_line_instance(prices, std::move(weights), std::move(theta)), std::move(groups),
          std::move(u_products)};
}

Placement heavy_tail_u_placement(const HeavyTailInstance& h) {
  const int m = h.instance.m();
  Placement x = Placement::empty(m);
  x[0] = h.u_products.front();
  for (int j = 2; j <= m; ++j) x[j - 1] = h.u_products[j - 2];
  return x;
}

Instance gen_max_coverage_mmnl(const std::vector<std::vector<int>>& sets, int q, int k,
                               double epsilon) {
  if (q < 1) throw std::domain_error("gen_max_coverage_mmnl: universe must be nonempty");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("gen_max_coverage_mmnl: epsilon must lie in (0, 1)");
  }
  const int n = static_cast<int>(sets.size());
  if (k < 1 || k > n) throw std::domain_error("gen_max_coverage_mmnl: K must lie in [1, #sets]");
  const double big = 1.0 / epsilon - 1.0;

  MmnlModel model;
  model.segments.assign(static_cast<std::size_t>(q),
                        MmnlSegment{1.0 / q, std::vector<double>(static_cast<std::size_t>(n), 0.0)});
  for (int i = 0; i < n; ++i) {
    for (int element : sets[i]) {
      if (element < 0 || element >= q) {
        throw std::domain_error("gen_max_coverage_mmnl: element " + std::to_string(element) +
                                " outside the universe");
      }
      model.segments[element].weights[i] = big;
    }
  }
  return Instance(make_products(std::vector<double>(static_cast<std::size_t>(n), 1.0)),
                  ChoiceModel(std::move(model)), k, Browsing(full_support(k)));
}

double coverage_revenue(const std::vector<std::vector<int>>& sets, int q, double epsilon,
                        const Assortment& chosen) {
  const double big = 1.0 / epsilon - 1.0;
  std::vector<int> cover(static_cast<std::size_t>(q), 0);
  for (ProductId i : chosen) {
    std::vector<int> elements = sets.at(i);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (int e : elements) ++cover.at(e);
  }
  double total = 0.0;
  for (int g : cover) total += g * big / (1.0 + g * big);
  return total / q;
}

std::string_view to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::kMnl: return "mnl";
    case ModelFamily::kMarkov: return "markov";
    case ModelFamily::kMmnl: return "mmnl";
    case ModelFamily::kRanked: return "ranked";
  }
  return "?";
}

std::string_view to_string(BrowsingFamily family) {
  switch (family) {
    case BrowsingFamily::kLine: return "line";
    case BrowsingFamily::kExplicit: return "explicit";
    case BrowsingFamily::kSingleton: return "singleton";
    case BrowsingFamily::kFull: return "full";
  }
  return "?";
}

ModelFamily parse_model_family(std::string_view name) {
  for (auto f : {ModelFamily::kMnl, ModelFamily::kMarkov, ModelFamily::kMmnl, ModelFamily::kRanked}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown choice model family '" + std::string(name) + "'");
}

BrowsingFamily parse_browsing_family(std::string_view name) {
  for (auto f : {BrowsingFamily::kLine, BrowsingFamily::kExplicit, BrowsingFamily::kSingleton,
                 BrowsingFamily::kFull}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown browsing family '" + std::string(name) + "'");
}

Instance gen_random(const RandomInstanceOptions& options) {
  if (options.n < 1 || options.m < 1) throw std::domain_error("gen_random: n and m must be >= 1");
  if (!(options.price_min >= 0.0 && options.price_min <= options.price_max) ||
      !std::isfinite(options.price_max)) {
    throw std::domain_error("gen_random: price range must satisfy 0 <= min <= max");
  }
  Rng rng = make_rng(options.seed, "instance");
  std::vector<double> prices(static_cast<std::size_t>(options.n), options.price_min);
  if (options.price_max > options.price_min) {
    std::uniform_real_distribution<double> price(options.price_min, options.price_max);
    for (double& p : prices) p = price(rng);
  }
  ChoiceModel model = random_model(rng, options.n, options.model);
  Browsing browsing = random_browsing(rng, options.m, options.browsing, options.max_support);
  return Instance(make_products(prices), std::move(model), options.m, std::move(browsing));
}

}  // namespace placement
