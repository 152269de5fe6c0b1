#include "placement/choice_model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "placement/errors.hpp"

namespace placement {
namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kPivotTolerance = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool sums_to_one(const std::vector<double>& v) {
  return std::abs(std::accumulate(v.begin(), v.end(), 0.0) - 1.0) <= kSumTolerance;
}

void check_nonnegative(const std::vector<double>& v, const std::string& what) {
  for (double x : v) require(std::isfinite(x) && x >= 0.0, what + " must be finite and >= 0");
}

int validate(const MnlModel& m) {
  require(!m.weights.empty(), "mnl: no products");
  check_nonnegative(m.weights, "mnl weights");
  return static_cast<int>(m.weights.size());
}

int validate(const MarkovModel& m) {
  const std::size_t states = m.arrival.size();
  require(states >= 2, "markov: need at least one product");
  check_nonnegative(m.arrival, "markov arrival");
  require(sums_to_one(m.arrival), "markov: arrival probabilities must sum to 1");
  require(m.transitions.size() == states, "markov: transition matrix must be (n+1)x(n+1)");
  for (std::size_t a = 0; a < states; ++a) {
    const auto& row = m.transitions[a];
    require(row.size() == states, "markov: transition matrix must be (n+1)x(n+1)");
    check_nonnegative(row, "markov transitions");
    require(sums_to_one(row), "markov: row " + std::to_string(a) + " must sum to 1");
  }
  require(std::abs(m.transitions[0][0] - 1.0) <= 1e-12, "markov: no-purchase state must be absorbing");
  return static_cast<int>(states) - 1;
}

int validate(const MmnlModel& m) {
  require(!m.segments.empty(), "mmnl: no segments");
  const std::size_t n = m.segments.front().weights.size();
  require(n > 0, "mmnl: no products");
  double total = 0.0;
  for (const auto& seg : m.segments) {
    require(std::isfinite(seg.theta) && seg.theta >= 0.0, "mmnl: theta must be >= 0");
    require(seg.weights.size() == n, "mmnl: segments disagree on product count");
    check_nonnegative(seg.weights, "mmnl weights");
    total += seg.theta;
  }
  require(std::abs(total - 1.0) <= kSumTolerance, "mmnl: thetas must sum to 1");
  return static_cast<int>(n);
}

int validate(const RankedListModel& m) {
  require(m.num_products > 0, "ranked: no products");
  require(!m.lists.empty(), "ranked: no lists");
  double total = 0.0;
  for (const auto& list : m.lists) {
    require(std::isfinite(list.prob) && list.prob >= 0.0, "ranked: prob must be >= 0");
    std::vector<bool> seen(static_cast<std::size_t>(m.num_products) + 1, false);
    for (int alt : list.order) {
      require(alt >= 0 && alt <= m.num_products, "ranked: alternative out of range");
      require(!seen[alt], "ranked: duplicate alternative in order");
      seen[alt] = true;
    }
    total += list.prob;
  }
  require(std::abs(total - 1.0) <= kSumTolerance, "ranked: probabilities must sum to 1");
  return m.num_products;
}

std::vector<double> probs(const MnlModel& m, const Assortment& s) {
  double denom = 1.0;
  for (ProductId i : s) denom += m.weights[i];
  std::vector<double> out;
  out.reserve(s.size());
  for (ProductId i : s) out.push_back(m.weights[i] / denom);
  return out;
}

std::vector<double> probs(const MmnlModel& m, const Assortment& s) {
  std::vector<double> out(s.size(), 0.0);
  for (const auto& seg : m.segments) {
    if (seg.theta == 0.0) continue;
    double denom = 1.0;
    for (ProductId i : s) denom += seg.weights[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      out[k] += seg.theta * seg.weights[s[k]] / denom;
    }
  }
  return out;
}

// Absorption probabilities with S and the no-purchase state absorbing.
// With T = N \ S transient, y solves (I - Q)^T y = lambda_T and
// phi(i) = lambda_i + sum_t y_t rho(t, i).
std::vector<double> probs(const MarkovModel& m, const Assortment& s) {
  const int n = static_cast<int>(m.arrival.size()) - 1;
  std::vector<int> transient;
  transient.reserve(static_cast<std::size_t>(n) - s.size());
  for (ProductId p = 0; p < n; ++p) {
    if (!s.contains(p)) transient.push_back(alternative_of(p));
  }

  std::vector<double> out;
  out.reserve(s.size());
  if (transient.empty()) {
    for (ProductId i : s) out.push_back(m.arrival[alternative_of(i)]);
    return out;
  }

  const auto t = static_cast<Eigen::Index>(transient.size());
  Eigen::MatrixXd a(t, t);
  Eigen::VectorXd rhs(t);
  for (Eigen::Index r = 0; r < t; ++r) {
    rhs(r) = m.arrival[transient[r]];
    for (Eigen::Index c = 0; c < t; ++c) {
      // Transposed: a(r, c) = (I - Q)(c, r).
      a(r, c) = (r == c ? 1.0 : 0.0) - m.transitions[transient[c]][transient[r]];
    }
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const auto& packed = lu.matrixLU();
  for (Eigen::Index d = 0; d < t; ++d) {
    if (std::abs(packed(d, d)) < kPivotTolerance) {
      throw NumericalError("markov: transient system is singular; some products "
                           "never reach an absorbing state");
    }
  }
  const Eigen::VectorXd y = lu.solve(rhs);

  for (ProductId i : s) {
    const int alt = alternative_of(i);
    double p = m.arrival[alt];
    for (Eigen::Index r = 0; r < t; ++r) p += y(r) * m.transitions[transient[r]][alt];
    out.push_back(std::clamp(p, 0.0, 1.0));
  }
  return out;
}

std::vector<double> probs(const RankedListModel& m, const Assortment& s) {
  std::vector<double> out(s.size(), 0.0);
  for (const auto& list : m.lists) {
    for (int alt : list.order) {
      if (alt == kNoPurchase) break;
      const ProductId p = alt - 1;
      if (s.contains(p)) {
        const auto pos = std::lower_bound(s.begin(), s.end(), p) - s.begin();
        out[static_cast<std::size_t>(pos)] += list.prob;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ChoiceKind kind) {
  switch (kind) {
    case ChoiceKind::kMnl: return "mnl";
    case ChoiceKind::kMarkov: return "markov";
    case ChoiceKind::kMmnl: return "mmnl";
    case ChoiceKind::kRanked: return "ranked";
  }
  return "unknown";
}

ChoiceModel::ChoiceModel(Variant model) : model_(std::move(model)) {
  num_products_ = std::visit([](const auto& m) { return validate(m); }, model_);
}

ChoiceKind ChoiceModel::kind() const {
  return static_cast<ChoiceKind>(model_.index());
}

std::vector<double> ChoiceModel::choice_probs(const Assortment& s) const {
  if (!s.empty() && (s[0] < 0 || s[s.size() - 1] >= num_products_)) {
    throw std::out_of_range("assortment contains an unknown product id");
  }
  return std::visit([&](const auto& m) { return probs(m, s); }, model_);
}

double ChoiceModel::choose_prob(ProductId i, const Assortment& s) const {
  if (!s.contains(i)) {
    throw std::domain_error("choose_prob: product " + std::to_string(i) +
                            " is not in the assortment");
  }
  const auto pos = std::lower_bound(s.begin(), s.end(), i) - s.begin();
  return choice_probs(s)[static_cast<std::size_t>(pos)];
}

double ChoiceModel::revenue(std::span<const double> prices, const Assortment& s) const {
  if (s.empty()) return 0.0;
  const std::vector<double> phi = choice_probs(s);
  double total = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) total += prices[s[k]] * phi[k];
  return total;
}

MarkovModel markov_from_mnl(const MnlModel& mnl) {
  validate(mnl);
  const std::size_t n = mnl.weights.size();
  const double denom =
      1.0 + std::accumulate(mnl.weights.begin(), mnl.weights.end(), 0.0);
  MarkovModel out;
  out.arrival.resize(n + 1);
  out.arrival[0] = 1.0 / denom;
  for (std::size_t i = 0; i < n; ++i) out.arrival[i + 1] = mnl.weights[i] / denom;

  out.transitions.assign(n + 1, std::vector<double>(n + 1, 0.0));
  out.transitions[0][0] = 1.0;
  for (std::size_t a = 1; a <= n; ++a) {
    const double stay = 1.0 - out.arrival[a];
    for (std::size_t b = 0; b <= n; ++b) {
      if (b != a) out.transitions[a][b] = out.arrival[b] / stay;
    }
  }
  return out;
}

std::vector<RationalityViolation> check_weak_rationality(const ChoiceModel& model,
                                                         int trials,
                                                         std::uint64_t seed,
                                                         double tolerance) {
  const int n = model.num_products();
  std::vector<RationalityViolation> found;
  auto check = [&](const Assortment& s, ProductId j) {
    const Assortment bigger = s.with(j);
    const std::vector<double> before = model.choice_probs(s);
    const std::vector<double> after = model.choice_probs(bigger);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(bigger.begin(), bigger.end(), s[k]) - bigger.begin());
      const double gap = after[pos] - before[k];
      if (gap > tolerance) found.push_back({s, s[k], j, gap});
    }
  };

  if (trials <= 0) {
    if (n > 16) throw SizeGuardError("exhaustive weak-rationality check limited to n <= 16");
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const Assortment s = Assortment::from_mask(mask);
      for (ProductId j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) check(s, j);
      }
    }
    return found;
  }

  if (n < 2) return found;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<ProductId> ids;
    for (ProductId p = 0; p < n; ++p) {
      if (coin(rng)) ids.push_back(p);
    }
    if (ids.empty()) ids.push_back(pick(rng));
    if (static_cast<int>(ids.size()) == n) ids.erase(ids.begin() + pick(rng));
    const Assortment s(std::move(ids));
    ProductId j = pick(rng);
    while (s.contains(j)) j = (j + 1) % n;
    check(s, j);
  }
  return found;
}

}  // namespace placement
