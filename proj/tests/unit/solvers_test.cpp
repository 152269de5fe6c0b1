#include <doctest.h>

#include <cmath>

#include "../helpers.hpp"
#include "../oracles.hpp"
#include "placement/errors.hpp"
#include "placement/solvers.hpp"

using namespace placement;

namespace {

double best_single_product_value(const Instance& inst) {
  double best = 0.0;
  for (int p = 0; p < inst.n(); ++p) best = std::max(best, oracle::revenue(inst, {p}));
  return best;
}

}  // namespace

TEST_SUITE("placement-solvers") {
  TEST_CASE("brute force agrees with the independent enumeration") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      for (auto family : testing_helpers::kAllModels) {
        const Instance inst = testing_helpers::random_instance(
            3, 2, family, seed % 2 ? BrowsingFamily::kExplicit : BrowsingFamily::kLine, seed);
        const SolveReport r = brute_force_placement(inst);
        const oracle::Best ref = oracle::brute_force_placement(inst);
        CHECK(*r.w_exact == doctest::Approx(ref.value).epsilon(1e-10));
        CHECK(oracle::w(inst, r.placement) == doctest::Approx(ref.value).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("one location: best single product") {
    const Instance inst = testing_helpers::random_instance(4, 1, ModelFamily::kMnl,
                                                           BrowsingFamily::kLine, 5);
    const SolveReport r = brute_force_placement(inst);
    CHECK(*r.w_exact == doctest::Approx(best_single_product_value(inst) * inst.browsing().enumerate()[0].prob));
    const AssortmentOracle o(inst, OracleKind::kBruteForce);
    const SolveReport bom = best_of_many_line(inst, o);
    CHECK(bom.placement[0] == o.best_assortment(1).members[0]);
  }

  TEST_CASE("singleton browsing: the best single product everywhere") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Instance inst = testing_helpers::random_instance(4, 3, ModelFamily::kMmnl,
                                                             BrowsingFamily::kSingleton, seed);
      const SolveReport r = brute_force_placement(inst);
      CHECK(*r.w_exact == doctest::Approx(best_single_product_value(inst)).epsilon(1e-12));
      CHECK(r.placement[0] == r.placement[1]);
      CHECK(r.placement[1] == r.placement[2]);
    }
  }

  TEST_CASE("size guard") {
    const Instance inst = testing_helpers::random_instance(15, 6, ModelFamily::kMnl,
                                                           BrowsingFamily::kLine, 1);
    CHECK_THROWS_AS(brute_force_placement(inst), SizeGuardError);
  }

  TEST_CASE("best of many on a line") {
    const Instance two = gen_lemma_single_2(16);
    const AssortmentOracle o(two, OracleKind::kBruteForce);
    const SolveReport r = best_of_many_line(two, o);
    CHECK(*r.w_exact >= (16.0 + 1.0) / 4.0);
    CHECK(r.k.has_value());
    CHECK_FALSE(r.placement.has_empty());

    const Instance explicit_inst = testing_helpers::random_instance(
        3, 2, ModelFamily::kMnl, BrowsingFamily::kExplicit, 2);
    CHECK_THROWS_AS(best_of_many_line(explicit_inst, AssortmentOracle(explicit_inst, OracleKind::kBruteForce)),
                    ContractError);
  }

  TEST_CASE("best of many meets OPT / log2 m on random lines") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Instance inst =
          testing_helpers::random_instance(4, 4, ModelFamily::kMnl, BrowsingFamily::kLine, seed);
      const double opt = *brute_force_placement(inst).w_exact;
      const double w = *best_of_many_line(inst, AssortmentOracle(inst, OracleKind::kBruteForce)).w_exact;
      CHECK(w >= opt / 2.0 - 1e-12);
    }
  }

  TEST_CASE("randomized placement is reproducible and keeps its best draw") {
    const Instance inst = testing_helpers::random_instance(5, 3, ModelFamily::kMarkov,
                                                           BrowsingFamily::kExplicit, 4);
    const AssortmentOracle o(inst, OracleKind::kBruteForce);
    RandomizedOptions opt;
    opt.seed = 7;
    const SolveReport a = randomized_placement(inst, o, opt);
    const SolveReport b = randomized_placement(inst, o, opt);
    CHECK(a.placement == b.placement);
    CHECK(*a.w_exact == *b.w_exact);
    CHECK(evaluate_exact(inst, a.placement) == doctest::Approx(*a.w_exact));
    // The k = 1 draw puts S*_1 everywhere, so the result can be no worse.
    const ProductId top = o.best_assortment(1).slots(inst.highest_price_product())[0];
    const Placement k1(std::vector<ProductId>(3, top));
    CHECK(*a.w_exact >= evaluate_exact(inst, k1) - 1e-12);
    opt.repetitions = 0;
    CHECK_THROWS_AS(randomized_placement(inst, o, opt), std::domain_error);
  }

  TEST_CASE("randomized placement is independent of the thread count") {
    const Instance inst = testing_helpers::random_instance(5, 4, ModelFamily::kMnl,
                                                           BrowsingFamily::kLine, 9);
    const AssortmentOracle o(inst, OracleKind::kBruteForce);
    setenv("PLACEMENT_OPT_THREADS", "1", 1);
    const SolveReport one = randomized_placement(inst, o);
    setenv("PLACEMENT_OPT_THREADS", "4", 1);
    const SolveReport four = randomized_placement(inst, o);
    unsetenv("PLACEMENT_OPT_THREADS");
    CHECK(one.placement == four.placement);
    CHECK(*one.w_exact == *four.w_exact);
  }

  TEST_CASE("randomized placement on singleton browsing approaches OPT") {
    const Instance inst = testing_helpers::random_instance(3, 3, ModelFamily::kMnl,
                                                           BrowsingFamily::kSingleton, 11);
    const double opt = *brute_force_placement(inst).w_exact;
    RandomizedOptions opt200;
    opt200.repetitions = 200;
    const SolveReport r =
        randomized_placement(inst, AssortmentOracle(inst, OracleKind::kBruteForce), opt200);
    CHECK(*r.w_exact >= 0.95 * opt);
  }

  TEST_CASE("randomized placement estimates W for sampler browsing") {
    const Instance exact = testing_helpers::random_instance(3, 2, ModelFamily::kMnl,
                                                            BrowsingFamily::kLine, 6);
    const Instance sampled(exact.products(), exact.choice_model(), 2,
                           Browsing(SamplerBrowsing(2, [](Rng& rng) {
                             return rng() % 2 ? LocationSet{0} : LocationSet{0, 1};
                           })));
    RandomizedOptions opt;
    opt.samples_override = 2000;
    opt.repetitions = 4;
    const SolveReport r = randomized_placement(sampled, AssortmentOracle(sampled, OracleKind::kBruteForce), opt);
    CHECK_FALSE(r.w_exact.has_value());
    REQUIRE(r.w_estimate.has_value());
    CHECK(r.w_estimate->samples == 2000);
  }

  TEST_CASE("uniform-price greedy") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = testing_helpers::random_instance(
          4, 3, ModelFamily::kMnl, seed % 2 ? BrowsingFamily::kExplicit : BrowsingFamily::kLine,
          seed, 3.0, 3.0);
      const double opt = *brute_force_placement(inst).w_exact;
      const SolveReport r = uniform_price_matroid_greedy(inst);
      CHECK(*r.w_exact >= 0.5 * opt - 1e-12);
      CHECK(*r.w_exact <= opt + 1e-12);
    }
    const Instance priced = testing_helpers::random_instance(3, 2, ModelFamily::kMnl,
                                                             BrowsingFamily::kLine, 1);
    CHECK_THROWS_AS(uniform_price_matroid_greedy(priced), ContractError);
  }

  TEST_CASE("uniform-price greedy with one location or full support") {
    const Instance one = testing_helpers::random_instance(4, 1, ModelFamily::kMmnl,
                                                          BrowsingFamily::kFull, 3, 1.0, 1.0);
    CHECK(*uniform_price_matroid_greedy(one).w_exact ==
          doctest::Approx(*brute_force_placement(one).w_exact));
    const Instance full = testing_helpers::random_instance(5, 3, ModelFamily::kMnl,
                                                           BrowsingFamily::kFull, 4, 1.0, 1.0);
    const SolveReport r = uniform_price_matroid_greedy(full);
    const Assortment greedy = greedy_uniform_assortment(full.choice_model(), full.prices(), 3).members;
    CHECK(*r.w_exact == doctest::Approx(full.revenue(greedy)).epsilon(1e-12));
  }

  TEST_CASE("Markov greedy is deterministic and meets its bound") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const Instance inst = testing_helpers::random_instance(
          4, 3, ModelFamily::kMarkov, seed % 2 ? BrowsingFamily::kExplicit : BrowsingFamily::kLine,
          seed);
      const AssortmentOracle o(inst, OracleKind::kBruteForce);
      const SolveReport a = markov_deterministic_placement(inst, o);
      const SolveReport b = markov_deterministic_placement(inst, o);
      CHECK(a.placement == b.placement);
      const double opt = *brute_force_placement(inst).w_exact;
      CHECK(*a.w_exact >= 0.5 * (1.0 - 1.0 / std::exp(1.0)) / std::log2(3.0) * opt);
    }
    const Instance one = testing_helpers::random_instance(4, 1, ModelFamily::kMarkov,
                                                          BrowsingFamily::kFull, 2);
    CHECK(*markov_deterministic_placement(one, AssortmentOracle(one, OracleKind::kBruteForce)).w_exact ==
          doctest::Approx(*brute_force_placement(one).w_exact));
    const Instance ranked = testing_helpers::random_instance(3, 2, ModelFamily::kRanked,
                                                             BrowsingFamily::kLine, 2);
    CHECK_THROWS_AS(markov_deterministic_placement(ranked, AssortmentOracle(ranked, OracleKind::kBruteForce)),
                    ContractError);
  }

  TEST_CASE("solvers return full placements that beat their own baselines") {
    const Instance inst = testing_helpers::random_instance(4, 3, ModelFamily::kMnl,
                                                           BrowsingFamily::kLine, 21);
    const AssortmentOracle o(inst, OracleKind::kBruteForce);
    const SolveReport bom = best_of_many_line(inst, o);
    for (int k = 1; k <= 3; ++k) {
      Placement x = Placement::empty(3);
      const auto slots = o.best_assortment(k).slots(inst.highest_price_product());
      for (int j = 0; j < k; ++j) x[j] = slots[j];
      CHECK(*bom.w_exact >= evaluate_exact(inst, fill_empty(inst, x)) - 1e-12);
    }
    for (const SolveReport& r : {bom, randomized_placement(inst, o), markov_deterministic_placement(inst, o)}) {
      CHECK_FALSE(r.placement.has_empty());
      CHECK(r.placement.m() == 3);
    }
  }
}
