#include <doctest.h>

#include "../helpers.hpp"
#include "../oracles.hpp"
#include "placement/errors.hpp"
#include "placement/properties.hpp"

using namespace placement;

namespace {

std::vector<int> to_vector(const Assortment& s) { return {s.begin(), s.end()}; }

void check_against_reference(const Instance& inst) {
  for (std::uint32_t mask = 0; mask < (1u << inst.n()); ++mask) {
    const Assortment s = Assortment::from_mask(mask);
    const std::vector<double> expected = oracle::choice(inst.choice_model(), inst.n(), to_vector(s));
    const std::vector<double> got = inst.choice_model().choice_probs(s);
    REQUIRE(got.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(got[i] == doctest::Approx(expected[s[i]]).epsilon(1e-9));
    }
    CHECK(inst.revenue(s) == doctest::Approx(oracle::revenue(inst, to_vector(s))).epsilon(1e-9));
  }
}

}  // namespace

TEST_SUITE("choice-models") {
  TEST_CASE("symmetric two-product logit") {
    const ChoiceModel mnl(MnlModel{{1.0, 1.0}});
    CHECK(mnl.choose_prob(0, Assortment{0, 1}) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS((void)mnl.choose_prob(0, Assortment{1}), std::domain_error);
  }

  TEST_CASE("empty assortment earns nothing") {
    const ChoiceModel mnl(MnlModel{{1.0, 2.0}});
    const double prices[] = {1.0, 2.0};
    CHECK(mnl.revenue(prices, Assortment{}) == 0.0);
  }

  TEST_CASE("all products of the single-slot gap instance at k = 2") {
    // U = {0, 1} (price 2, weight 1/2), q = 2 (price 1, weight 1).
    const Instance inst = gen_lemma_single_1(2);
    CHECK(inst.revenue(Assortment{0, 1, 2}) ==
          doctest::Approx(oracle::revenue(inst, {0, 1, 2})).epsilon(1e-12));
    CHECK(inst.revenue(Assortment{0, 1, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("heavy-tail group revenue closed form") {
    const HeavyTailInstance h = gen_instance_i(4, 1.0);
    const Assortment group4(h.groups[3]);
    CHECK(h.instance.revenue(group4) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("Markov chain built from MNL reproduces MNL") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = testing_helpers::random_instance(4, 1, ModelFamily::kMnl,
                                                             BrowsingFamily::kLine, seed);
      const auto& mnl = std::get<MnlModel>(inst.choice_model().variant());
      const ChoiceModel markov(markov_from_mnl(mnl));
      for (std::uint32_t mask = 1; mask < 16u; ++mask) {
        const Assortment s = Assortment::from_mask(mask);
        const auto a = inst.choice_model().choice_probs(s);
        const auto b = markov.choice_probs(s);
        const auto ref = oracle::choice(markov, 4, to_vector(s));
        for (std::size_t i = 0; i < s.size(); ++i) {
          CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-9));
          CHECK(ref[s[i]] == doctest::Approx(a[i]).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("single-segment mixture equals MNL") {
    const ChoiceModel mnl(MnlModel{{0.3, 1.2, 2.0}});
    const ChoiceModel mix(MmnlModel{{{1.0, {0.3, 1.2, 2.0}}}});
    for (std::uint32_t mask = 1; mask < 8u; ++mask) {
      const Assortment s = Assortment::from_mask(mask);
      CHECK(mix.choice_probs(s) == mnl.choice_probs(s));
    }
  }

  TEST_CASE("ranked lists: unlisted products rank below leaving") {
    const ChoiceModel ranked(RankedListModel{3, {{0.6, {alternative_of(2), alternative_of(0)}},
                                                {0.4, {kNoPurchase, alternative_of(1)}}}});
    CHECK(ranked.choose_prob(0, Assortment{0, 1}) == doctest::Approx(0.6));
    CHECK(ranked.choose_prob(1, Assortment{0, 1}) == doctest::Approx(0.0));
    CHECK(ranked.choose_prob(2, Assortment{0, 2}) == doctest::Approx(0.6));
  }

  TEST_CASE("every model agrees with the reference on all assortments") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (auto family : testing_helpers::kAllModels) {
        check_against_reference(
            testing_helpers::random_instance(5, 1, family, BrowsingFamily::kLine, seed));
      }
    }
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(ChoiceModel(MnlModel{{1.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(ChoiceModel(MmnlModel{{{0.5, {1.0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(ChoiceModel(RankedListModel{2, {{1.0, {alternative_of(2)}}}}),
                    std::invalid_argument);
    MarkovModel leaky{{0.0, 1.0}, {{0.5, 0.5}, {0.5, 0.5}}};
    CHECK_THROWS_AS(ChoiceModel(std::move(leaky)), std::invalid_argument);
  }

  TEST_CASE("Markov chain without an exit is singular") {
    // Product 1 (alternative 2) cycles to itself forever when not offered.
    const ChoiceModel stuck(MarkovModel{{0.0, 0.0, 1.0},
                                        {{1.0, 0.0, 0.0}, {0.5, 0.5, 0.0}, {0.0, 0.0, 1.0}}});
    CHECK_THROWS_AS((void)stuck.choice_probs(Assortment{0}), NumericalError);
  }

  TEST_CASE("weak rationality holds exhaustively for every model family") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (auto family : testing_helpers::kAllModels) {
        const Instance inst =
            testing_helpers::random_instance(4, 1, family, BrowsingFamily::kLine, seed);
        CHECK(check_weak_rationality(inst.choice_model(), 0, 0).empty());
        CHECK(check_weak_rationality(inst.choice_model(), 500, seed).empty());
      }
    }
  }

  TEST_CASE("identical prices make revenue monotone submodular") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (auto family : testing_helpers::kAllModels) {
        const Instance inst = testing_helpers::random_instance(5, 1, family,
                                                               BrowsingFamily::kLine, seed, 1.0, 1.0);
        std::vector<int> all{0, 1, 2, 3, 4};
        const SetFunctionCheck check = check_revenue_on(inst, Assortment(all));
        CHECK_MESSAGE(check.ok(), to_string(family));
      }
    }
  }

  TEST_CASE("adding the highest-priced product never lowers revenue") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (auto family : testing_helpers::kAllModels) {
        const Instance inst =
            testing_helpers::random_instance(6, 1, family, BrowsingFamily::kLine, seed);
        CHECK(check_highest_price_addition(inst).empty());
      }
    }
  }
}
