#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "placement/types.hpp"

namespace placement {

// Markov states and ranked-list entries index "alternatives": 0 is the
// no-purchase option and product p is alternative p + 1.
inline constexpr int kNoPurchase = 0;
inline constexpr int alternative_of(ProductId p) { return p + 1; }

/// Multinomial logit with no-purchase weight 1. A zero weight encodes a
/// product that is never chosen.
struct MnlModel {
  std::vector<double> weights;
};

/// Markov chain choice model over alternatives {0, products}. State 0 is
/// absorbing; `arrival` and every row of `transitions` have n + 1 entries.
struct MarkovModel {
  std::vector<double> arrival;
  std::vector<std::vector<double>> transitions;
};

struct MmnlSegment {
  double theta = 0.0;
  std::vector<double> weights;
};

/// Mixture of MNL segments; segment thetas sum to 1.
struct MmnlModel {
  std::vector<MmnlSegment> segments;
};

struct RankedList {
  double prob = 0.0;
  // Alternatives in preference order. Unlisted products rank below the
  // no-purchase option.
  std::vector<int> order;
};

struct RankedListModel {
  int num_products = 0;
  std::vector<RankedList> lists;
};

enum class ChoiceKind { kMnl, kMarkov, kMmnl, kRanked };

std::string_view to_string(ChoiceKind kind);

/// A validated choice model. Immutable after construction; every query is
/// a pure function of the model and the assortment.
class ChoiceModel {
 public:
  using Variant = std::variant<MnlModel, MarkovModel, MmnlModel, RankedListModel>;

  // Throws std::invalid_argument if the parameters violate the model's
  // invariants (negative weights, rows not summing to 1, ...).
  explicit ChoiceModel(Variant model);

  [[nodiscard]] int num_products() const { return num_products_; }
  [[nodiscard]] ChoiceKind kind() const;
  [[nodiscard]] const Variant& variant() const { return model_; }

  /// phi(i, S). Throws std::domain_error if i is not in S.
  [[nodiscard]] double choose_prob(ProductId i, const Assortment& s) const;

  /// phi(i, S) for every i in S, aligned with the iteration order of S.
  [[nodiscard]] std::vector<double> choice_probs(const Assortment& s) const;

  /// R(S) = sum_i r_i phi(i, S).
  [[nodiscard]] double revenue(std::span<const double> prices,
                               const Assortment& s) const;

 private:
  Variant model_;
  int num_products_ = 0;
};

/// The Markov chain that reproduces an MNL model exactly:
/// lambda_i = v_i / (1 + sum v), rho(i, j) = lambda_j / (1 - lambda_i).
MarkovModel markov_from_mnl(const MnlModel& mnl);

struct RationalityViolation {
  Assortment assortment;
  ProductId product = 0;  // i in S
  ProductId added = 0;    // j not in S
  double magnitude = 0.0; // phi(i, S + j) - phi(i, S) > 0
};

/// Checks phi(i, S) >= phi(i, S + j). With `trials` <= 0 every (S, i, j)
/// triple is enumerated (n <= 16); otherwise `trials` random triples are
/// drawn from `seed`.
std::vector<RationalityViolation> check_weak_rationality(const ChoiceModel& model,
                                                         int trials,
                                                         std::uint64_t seed,
                                                         double tolerance = 1e-12);

}  // namespace placement
