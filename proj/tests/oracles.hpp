#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the data types: revenue is computed from the raw model
// parameters, Markov absorption by iterating the chain, and placements are
// enumerated recursively.

#include <cmath>
#include <functional>
#include <variant>
#include <vector>

#include "placement/instance.hpp"

namespace oracle {

using placement::Instance;
using placement::Placement;

inline std::vector<bool> membership(int n, const std::vector<int>& s) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int p : s) in[p] = true;
  return in;
}

// Choice probability of every product (index = product id) under offer set s.
inline std::vector<double> choice(const placement::ChoiceModel& model, int n,
                                  const std::vector<int>& s) {
  const std::vector<bool> in = membership(n, s);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  auto logit = [&](const std::vector<double>& w, double scale) {
    double denom = 1.0;
    for (int p = 0; p < n; ++p) denom += in[p] ? w[p] : 0.0;
    for (int p = 0; p < n; ++p) out[p] += in[p] ? scale * w[p] / denom : 0.0;
  };
  const auto& v = model.variant();
  if (const auto* mnl = std::get_if<placement::MnlModel>(&v)) {
    logit(mnl->weights, 1.0);
  } else if (const auto* mix = std::get_if<placement::MmnlModel>(&v)) {
    for (const auto& seg : mix->segments) logit(seg.weights, seg.theta);
  } else if (const auto* ranked = std::get_if<placement::RankedListModel>(&v)) {
    for (const auto& list : ranked->lists) {
      for (int alt : list.order) {
        if (alt == 0) break;
        if (in[alt - 1]) {
          out[alt - 1] += list.prob;
          break;
        }
      }
    }
  } else {
    // Markov: push mass along the chain until it is absorbed.
    const auto& mk = std::get<placement::MarkovModel>(v);
    std::vector<double> mass = mk.arrival;
    for (int step = 0; step < 200000; ++step) {
      std::vector<double> next(mass.size(), 0.0);
      double moving = 0.0;
      for (int p = 0; p < n; ++p) {
        const double x = mass[p + 1];
        if (x == 0.0) continue;
        if (in[p]) {
          out[p] += x;
          continue;
        }
        moving += x;
        for (std::size_t a = 0; a < mass.size(); ++a) next[a] += x * mk.transitions[p + 1][a];
      }
      next[0] = 0.0;
      mass = std::move(next);
      if (moving < 1e-17) break;
    }
  }
  return out;
}

inline double revenue(const Instance& instance, const std::vector<int>& s) {
  const std::vector<double> phi = choice(instance.choice_model(), instance.n(), s);
  double r = 0.0;
  for (int p = 0; p < instance.n(); ++p) r += instance.products()[p].price * phi[p];
  return r;
}

struct Visit {
  std::vector<int> locations;
  double prob;
};

// Support read straight from the browsing parameters.
inline std::vector<Visit> support(const Instance& instance) {
  std::vector<Visit> out;
  const auto& v = instance.browsing().variant();
  if (const auto* line = std::get_if<placement::LineBrowsing>(&v)) {
    std::vector<int> prefix;
    for (std::size_t j = 0; j < line->theta().size(); ++j) {
      prefix.push_back(static_cast<int>(j));
      out.push_back({prefix, line->theta()[j]});
    }
  } else {
    for (const auto& w : std::get<placement::ExplicitBrowsing>(v).support()) {
      out.push_back({std::vector<int>(w.locations.begin(), w.locations.end()), w.prob});
    }
  }
  return out;
}

inline double w(const Instance& instance, const std::vector<int>& slots) {
  double total = 0.0;
  for (const Visit& visit : support(instance)) {
    std::vector<bool> shown(static_cast<std::size_t>(instance.n()), false);
    for (int j : visit.locations) {
      if (slots[j] >= 0) shown[slots[j]] = true;
    }
    std::vector<int> s;
    for (int p = 0; p < instance.n(); ++p) {
      if (shown[p]) s.push_back(p);
    }
    total += visit.prob * revenue(instance, s);
  }
  return total;
}

inline double w(const Instance& instance, const Placement& x) {
  return w(instance, std::vector<int>(x.slots().begin(), x.slots().end()));
}

struct Best {
  double value = -1.0;
  std::vector<int> slots;
};

// Depth-first enumeration of all n^m placements.
inline Best brute_force_placement(const Instance& instance) {
  Best best;
  std::vector<int> slots(static_cast<std::size_t>(instance.m()), 0);
  std::function<void(int)> dfs = [&](int j) {
    if (j == instance.m()) {
      const double value = w(instance, slots);
      if (value > best.value) best = {value, slots};
      return;
    }
    for (int p = 0; p < instance.n(); ++p) {
      slots[j] = p;
      dfs(j + 1);
    }
  };
  dfs(0);
  return best;
}

// max R(S) over |S| <= k by recursive subset enumeration.
inline double best_revenue(const Instance& instance, int k) {
  double best = 0.0;
  std::vector<int> s;
  std::function<void(int)> rec = [&](int p) {
    if (p == instance.n()) {
      best = std::max(best, revenue(instance, s));
      return;
    }
    rec(p + 1);
    if (static_cast<int>(s.size()) < k) {
      s.push_back(p);
      rec(p + 1);
      s.pop_back();
    }
  };
  rec(0);
  return best;
}

// Mean revenue of the distinct products among j uniform draws (with
// replacement) from `pool`, averaged over all |pool|^j outcomes.
inline double random_subset_revenue(const Instance& instance, const std::vector<int>& pool) {
  const int j = static_cast<int>(pool.size());
  double total = 0.0;
  long long outcomes = 0;
  std::vector<int> pick(static_cast<std::size_t>(j), 0);
  while (true) {
    std::vector<bool> in(static_cast<std::size_t>(instance.n()), false);
    for (int i : pick) in[pool[i]] = true;
    std::vector<int> s;
    for (int p = 0; p < instance.n(); ++p) {
      if (in[p]) s.push_back(p);
    }
    total += revenue(instance, s);
    ++outcomes;
    int pos = 0;
    while (pos < j && pick[pos] == j - 1) pick[pos++] = 0;
    if (pos == j) break;
    ++pick[pos];
  }
  return total / static_cast<double>(outcomes);
}

}  // namespace oracle
