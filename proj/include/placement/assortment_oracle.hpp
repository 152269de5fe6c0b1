#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "placement/choice_model.hpp"
#include "placement/instance.hpp"
#include "placement/types.hpp"

namespace placement {

/// S*_k as returned by an oracle. Optimal sets may hold fewer than k real
/// products; the remainder are dummies (never chosen, priced like i*), so
/// `size()` is always exactly k.
struct OracleAssortment {
  Assortment members;
  int dummies = 0;

  [[nodiscard]] int size() const { return static_cast<int>(members.size()) + dummies; }

  /// The k products to display: members in ascending id, then one copy of
  /// `fill` per dummy.
  [[nodiscard]] std::vector<ProductId> slots(ProductId fill) const;
};

// Largest catalog the exhaustive assortment search accepts.
inline constexpr int kBruteForceMaxProducts = 22;

/// Exact max_{|S| <= k} R(S) by enumerating every subset of size <= k.
/// Ties keep the first set found (smaller sets first, then lexicographic).
/// Throws SizeGuardError for n > 22.
OracleAssortment brute_force_assortment(const ChoiceModel& model,
                                        std::span<const double> prices, int k);

/// Exact cardinality-constrained MNL optimum via a threshold search on
/// the revenue level t: the k largest positive v_i (r_i - t) are selected
/// and t is feasible iff their sum is >= t.
OracleAssortment mnl_exact_assortment(const MnlModel& model,
                                      std::span<const double> prices, int k);

/// Greedy on the monotone submodular revenue of uniformly priced products.
/// Throws ContractError if the prices differ.
OracleAssortment greedy_uniform_assortment(const ChoiceModel& model,
                                           std::span<const double> prices, int k);

enum class OracleKind { kBruteForce, kMnlExact, kGreedyUniform };

std::string_view to_string(OracleKind kind);
OracleKind parse_oracle_kind(std::string_view name);

/// Black-box cardinality-constrained assortment optimizer bound to an
/// instance. Holds a reference to `instance`, which must outlive it.
class AssortmentOracle {
 public:
  using Solver = std::function<OracleAssortment(int)>;

  // Throws ContractError if `kind` does not apply to the instance (MNL exact
  // on a non-MNL model, greedy on non-uniform prices).
  AssortmentOracle(const Instance& instance, OracleKind kind);

  /// Plug-in oracle. `alpha_is_empirical` marks factors measured rather
  /// than proven.
  AssortmentOracle(const Instance& instance, std::string name, double alpha,
                   bool alpha_is_empirical, Solver solver);

  /// S*_k with exactly k entries. Throws std::domain_error unless 1 <= k <= m.
  [[nodiscard]] OracleAssortment best_assortment(int k) const;

  [[nodiscard]] const Instance& instance() const { return *instance_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] bool alpha_is_empirical() const { return empirical_; }

 private:
  const Instance* instance_;
  std::string name_;
  double alpha_;
  bool empirical_;
  Solver solver_;
};

/// min over k in [m] of R(oracle S*_k) / R(brute-force S*_k); 1 when every
/// optimum is zero. Used to label plug-in oracles with an empirical alpha.
double measure_alpha(const AssortmentOracle& oracle);

}  // namespace placement
