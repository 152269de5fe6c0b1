#include "placement/browsing.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "placement/errors.hpp"

namespace placement {
namespace {

constexpr double kSumTolerance = 1e-9;

LocationSet prefix(int length) {
  std::vector<int> ids(static_cast<std::size_t>(length));
  std::iota(ids.begin(), ids.end(), 0);
  return LocationSet(std::move(ids));
}

// Inverse-CDF draw over `weights` (which may sum to slightly less than 1).
std::size_t draw_index(const std::vector<double>& cumulative, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, cumulative.back());
  const double u = unit(rng);
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min(static_cast<std::size_t>(it - cumulative.begin()),
                  cumulative.size() - 1);
}

}  // namespace

ExplicitBrowsing::ExplicitBrowsing(int m, std::vector<WeightedLocations> support) : m_(m) {
  if (m < 1) throw std::domain_error("browsing: need at least one location");
  std::map<LocationSet, double> merged;
  double total = 0.0;
  for (auto& entry : support) {
    if (!std::isfinite(entry.prob) || entry.prob < 0.0) {
      throw std::invalid_argument("browsing: probabilities must be >= 0");
    }
    for (LocationId j : entry.locations) {
      if (j < 0 || j >= m) {
        throw std::out_of_range("browsing: location " + std::to_string(j) +
                                " outside [0, " + std::to_string(m) + ")");
      }
    }
    merged[entry.locations] += entry.prob;
    total += entry.prob;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw std::invalid_argument("browsing: probabilities must sum to 1");
  }
  support_.reserve(merged.size());
  for (auto& [locations, prob] : merged) support_.push_back({locations, prob});
}

LineBrowsing::LineBrowsing(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.empty()) throw std::domain_error("line browsing: need at least one location");
  double total = 0.0;
  for (double t : theta_) {
    if (!std::isfinite(t) || t < 0.0) {
      throw std::invalid_argument("line browsing: theta must be >= 0");
    }
    total += t;
  }
  if (total > 1.0 + kSumTolerance) {
    throw std::invalid_argument("line browsing: theta must sum to at most 1");
  }
  residual_ = std::max(0.0, 1.0 - total);
}

SamplerBrowsing::SamplerBrowsing(int m, Generator generator)
    : m_(m), generator_(std::move(generator)) {
  if (m < 1) throw std::domain_error("browsing: need at least one location");
  if (!generator_) throw std::invalid_argument("sampler browsing: empty generator");
}

LocationSet SamplerBrowsing::draw(Rng& rng) const { return generator_(rng); }

int Browsing::m() const {
  return std::visit([](const auto& b) { return b.m(); }, model_);
}

std::vector<WeightedLocations> Browsing::enumerate() const {
  if (const auto* e = std::get_if<ExplicitBrowsing>(&model_)) return e->support();
  if (const auto* line = std::get_if<LineBrowsing>(&model_)) {
    std::vector<WeightedLocations> out;
    out.reserve(static_cast<std::size_t>(line->m()) + 1);
    for (int j = 1; j <= line->m(); ++j) out.push_back({prefix(j), line->theta()[j - 1]});
    if (line->residual() > 1e-12) out.push_back({LocationSet{}, line->residual()});
    return out;
  }
  throw UnsupportedOperation(
      "browsing: sampler-only distribution cannot be enumerated; use estimation");
}

LocationSet Browsing::sample(Rng& rng) const {
  if (const auto* s = std::get_if<SamplerBrowsing>(&model_)) return s->draw(rng);
  if (const auto* line = std::get_if<LineBrowsing>(&model_)) {
    std::vector<double> cumulative(line->theta().size() + 1);
    std::partial_sum(line->theta().begin(), line->theta().end(), cumulative.begin());
    cumulative.back() = cumulative[cumulative.size() - 2] + line->residual();
    const std::size_t idx = draw_index(cumulative, rng);
    return idx < line->theta().size() ? prefix(static_cast<int>(idx) + 1) : LocationSet{};
  }
  const auto& support = std::get<ExplicitBrowsing>(model_).support();
  std::vector<double> cumulative(support.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) cumulative[k] = (acc += support[k].prob);
  return support[draw_index(cumulative, rng)].locations;
}

ExplicitBrowsing singleton_uniform(int m) {
  if (m < 1) throw std::domain_error("singleton_uniform: m must be >= 1");
  std::vector<WeightedLocations> support;
  support.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) support.push_back({LocationSet{j}, 1.0 / m});
  return ExplicitBrowsing(m, std::move(support));
}

ExplicitBrowsing full_support(int m) {
  if (m < 1) throw std::domain_error("full_support: m must be >= 1");
  return ExplicitBrowsing(m, {{prefix(m), 1.0}});
}

}  // namespace placement
