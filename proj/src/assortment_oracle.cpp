#include "placement/assortment_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "placement/errors.hpp"

namespace placement {
namespace {

constexpr double kTieTolerance = 1e-12;
constexpr int kThresholdIterations = 200;

bool improves(double candidate, double best) {
  return candidate > best + kTieTolerance * std::max(1.0, std::abs(best));
}

void check_k(int k) {
  if (k < 0) throw std::domain_error("assortment: cardinality must be >= 0");
}

OracleAssortment padded(Assortment s, int k) {
  const int dummies = std::max(0, k - static_cast<int>(s.size()));
  return {std::move(s), dummies};
}

bool all_equal(std::span<const double> prices) {
  return std::all_of(prices.begin(), prices.end(), [&](double r) {
    return std::abs(r - prices.front()) <= 1e-12 * std::max(1.0, std::abs(prices.front()));
  });
}

// Scores v_i (r_i - t) for the threshold search.
struct ThresholdScores {
  std::span<const double> weights;
  std::span<const double> prices;
  std::vector<std::pair<double, ProductId>> buffer;

  // Sum of the k largest positive scores at level t.
  double best_sum(double t, int k) {
    buffer.clear();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double score = weights[i] * (prices[i] - t);
      if (score > 0.0) buffer.emplace_back(score, static_cast<ProductId>(i));
    }
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), buffer.size());
    if (take < buffer.size()) {
      std::nth_element(buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(take),
                       buffer.end(), std::greater<>());
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < take; ++j) sum += buffer[j].first;
    return sum;
  }

  // The k largest positive scores at level t; ties go to the lower id.
  Assortment best_set(double t, int k) {
    best_sum(t, 0);
    std::sort(buffer.begin(), buffer.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<ProductId> ids;
    for (std::size_t j = 0; j < buffer.size() && static_cast<int>(j) < k; ++j) {
      ids.push_back(buffer[j].second);
    }
    return Assortment(std::move(ids));
  }
};

}  // namespace

std::vector<ProductId> OracleAssortment::slots(ProductId fill) const {
  std::vector<ProductId> out(members.begin(), members.end());
  out.insert(out.end(), static_cast<std::size_t>(dummies), fill);
  return out;
}

OracleAssortment brute_force_assortment(const ChoiceModel& model,
                                        std::span<const double> prices, int k) {
  check_k(k);
  const int n = model.num_products();
  if (n > kBruteForceMaxProducts) {
    throw SizeGuardError("brute-force assortment limited to n <= " +
                         std::to_string(kBruteForceMaxProducts) + " (n = " +
                         std::to_string(n) + ")");
  }
  const int max_size = std::min(k, n);
  Assortment best;
  double best_revenue = 0.0;
  for (int size = 1; size <= max_size; ++size) {
    // Gosper's hack: all n-bit masks with `size` bits set, in increasing order.
    std::uint32_t mask = (1u << size) - 1u;
    const std::uint32_t limit = 1u << n;
    while (mask < limit) {
      const Assortment s = Assortment::from_mask(mask);
      const double r = model.revenue(prices, s);
      if (improves(r, best_revenue)) {
        best_revenue = r;
        best = s;
      }
      const std::uint32_t low = mask & (~mask + 1u);
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return padded(std::move(best), k);
}

OracleAssortment mnl_exact_assortment(const MnlModel& model,
                                      std::span<const double> prices, int k) {
  check_k(k);
  if (prices.size() != model.weights.size()) {
    throw std::invalid_argument("mnl exact: price and weight vectors differ in length");
  }
  if (k == 0 || prices.empty()) return padded({}, k);
  ThresholdScores scores{model.weights, prices, {}};
  double lo = 0.0;
  double hi = *std::max_element(prices.begin(), prices.end());
  if (hi <= 0.0) return padded({}, k);
  // Invariant: level lo is attainable (sum >= lo), level hi is not.
  for (int it = 0; it < kThresholdIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (scores.best_sum(mid, k) >= mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return padded(scores.best_set(lo, k), k);
}

OracleAssortment greedy_uniform_assortment(const ChoiceModel& model,
                                           std::span<const double> prices, int k) {
  check_k(k);
  if (!all_equal(prices)) {
    throw ContractError("greedy uniform assortment requires identical prices");
  }
  const int n = model.num_products();
  Assortment current;
  for (int step = 0; step < std::min(k, n); ++step) {
    ProductId pick = -1;
    double pick_revenue = 0.0;
    for (ProductId i = 0; i < n; ++i) {
      if (current.contains(i)) continue;
      const double r = model.revenue(prices, current.with(i));
      if (pick < 0 || improves(r, pick_revenue)) {
        pick = i;
        pick_revenue = r;
      }
    }
    current = current.with(pick);
  }
  return padded(std::move(current), k);
}

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::kBruteForce: return "brute";
    case OracleKind::kMnlExact: return "mnl-exact";
    case OracleKind::kGreedyUniform: return "greedy-uniform";
  }
  return "unknown";
}

OracleKind parse_oracle_kind(std::string_view name) {
  if (name == "brute") return OracleKind::kBruteForce;
  if (name == "mnl-exact") return OracleKind::kMnlExact;
  if (name == "greedy-uniform") return OracleKind::kGreedyUniform;
  throw std::invalid_argument("unknown oracle '" + std::string(name) + "'");
}

AssortmentOracle::AssortmentOracle(const Instance& instance, OracleKind kind)
    : instance_(&instance), name_(to_string(kind)), alpha_(1.0), empirical_(false) {
  const ChoiceModel& model = instance.choice_model();
  const std::span<const double> prices = instance.prices();
  switch (kind) {
    case OracleKind::kBruteForce:
      solver_ = [&model, prices](int k) { return brute_force_assortment(model, prices, k); };
      break;
    case OracleKind::kMnlExact: {
      const auto* mnl = std::get_if<MnlModel>(&model.variant());
      if (mnl == nullptr) throw ContractError("mnl-exact oracle requires an MNL model");
      solver_ = [mnl, prices](int k) { return mnl_exact_assortment(*mnl, prices, k); };
      break;
    }
    case OracleKind::kGreedyUniform:
      if (!instance.uniform_prices()) {
        throw ContractError("greedy-uniform oracle requires identical prices");
      }
      alpha_ = 1.0 - std::exp(-1.0);
      solver_ = [&model, prices](int k) { return greedy_uniform_assortment(model, prices, k); };
      break;
  }
}

AssortmentOracle::AssortmentOracle(const Instance& instance, std::string name,
                                   double alpha, bool alpha_is_empirical, Solver solver)
    : instance_(&instance),
      name_(std::move(name)),
      alpha_(alpha),
      empirical_(alpha_is_empirical),
      solver_(std::move(solver)) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("oracle alpha must lie in (0, 1]");
  if (!solver_) throw std::invalid_argument("oracle: empty solver");
}

OracleAssortment AssortmentOracle::best_assortment(int k) const {
  if (k < 1 || k > instance_->m()) {
    throw std::domain_error("oracle: cardinality " + std::to_string(k) +
                            " outside [1, " + std::to_string(instance_->m()) + "]");
  }
  OracleAssortment out = solver_(k);
  if (static_cast<int>(out.members.size()) > k) {
    throw std::logic_error("oracle '" + name_ + "' returned more than k products");
  }
  // Plug-in solvers may return fewer than k products; pad with dummies.
  out.dummies = k - static_cast<int>(out.members.size());
  return out;
}

double measure_alpha(const AssortmentOracle& oracle) {
  const Instance& inst = oracle.instance();
  double ratio = 1.0;
  for (int k = 1; k <= inst.m(); ++k) {
    const double best =
        inst.revenue(brute_force_assortment(inst.choice_model(), inst.prices(), k).members);
    if (best <= 0.0) continue;
    ratio = std::min(ratio, inst.revenue(oracle.best_assortment(k).members) / best);
  }
  return ratio;
}

}  // namespace placement
