#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "../helpers.hpp"
#include "../oracles.hpp"
#include "placement/estimation.hpp"
#include "placement/solvers.hpp"

using namespace placement;

TEST_SUITE("estimation") {
  TEST_CASE("sample size formula") {
    // ceil(100 ln 20 / 0.02)
    CHECK(sample_size(10, 0.1, 0.05) == 14979);
    CHECK(sample_size(1, 1.0, std::exp(-2.0)) == 1);
    CHECK(sample_size(5, 0.05, 0.1) >= 4 * sample_size(5, 0.1, 0.1) - 3);
    CHECK(sample_size_for_candidates(10, 0.1, 0.05, 1) == 14979);
    // ceil(100 ln(4 / 0.05) / 0.02)
    CHECK(sample_size_for_candidates(10, 0.1, 0.05, 4) ==
          static_cast<std::int64_t>(std::ceil(100.0 * std::log(80.0) / 0.02)));
    CHECK_THROWS_AS(sample_size(0, 0.1, 0.1), std::domain_error);
    CHECK_THROWS_AS(sample_size(3, 0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(sample_size(3, 0.1, 1.5), std::domain_error);
  }

  TEST_CASE("point-mass browsing gives W exactly") {
    const Instance inst(make_products(std::vector<double>{2.0, 5.0}),
                        ChoiceModel(MnlModel{{1.0, 0.5}}), 2,
                        Browsing(ExplicitBrowsing(2, {{LocationSet{0, 1}, 1.0}})));
    const Placement x(std::vector<ProductId>{0, 1});
    const EstimationPlan plan = make_plan(inst, 0.5, 0.5, 17);
    const Estimate e = estimate_w(inst, x, plan, 3);
    CHECK(e.value == doctest::Approx(evaluate_exact(inst, x)).epsilon(1e-12));
    CHECK(e.samples == 17);
    CHECK(e.std_error == doctest::Approx(0.0));
  }

  TEST_CASE("estimate converges on a two-slot line") {
    const Instance inst = testing_helpers::mnl_line({2.0, 3.0}, {1.0, 0.7}, {0.5, 0.5});
    const Placement x(std::vector<ProductId>{0, 1});
    const double w = oracle::w(inst, x);
    const Estimate e = estimate_w(inst, x, make_plan(inst, 0.1, 0.1, 100000), 11);
    CHECK(std::abs(e.value - w) <= 3.0 * e.std_error + 1e-12);
    CHECK(e.std_error > 0.0);
  }

  TEST_CASE("estimate is identical for any thread count") {
    const Instance inst = testing_helpers::random_instance(4, 3, ModelFamily::kMmnl,
                                                           BrowsingFamily::kExplicit, 5);
    const Placement x(std::vector<ProductId>{0, 1, 2});
    const EstimationPlan plan = make_plan(inst, 0.1, 0.1, 5000);
    setenv("PLACEMENT_OPT_THREADS", "1", 1);
    const Estimate one = estimate_w(inst, x, plan, 99);
    setenv("PLACEMENT_OPT_THREADS", "3", 1);
    const Estimate three = estimate_w(inst, x, plan, 99);
    unsetenv("PLACEMENT_OPT_THREADS");
    CHECK(one.value == three.value);
    CHECK(one.std_error == three.std_error);
  }

  TEST_CASE("coverage at eps = 0.2, delta = 0.1 on a 3x3 instance") {
    const Instance inst = testing_helpers::random_instance(3, 3, ModelFamily::kMnl,
                                                           BrowsingFamily::kLine, 13);
    const double opt = *brute_force_placement(inst).w_exact;
    const Placement x(std::vector<ProductId>{1, 0, 2});
    const double w = oracle::w(inst, x);
    const EstimationPlan plan = make_plan(inst, 0.2, 0.1);
    int covered = 0;
    for (int t = 0; t < 200; ++t) {
      covered += std::abs(estimate_w(inst, x, plan, 1000 + t).value - w) <= 0.2 * opt ? 1 : 0;
    }
    CHECK(covered >= 160);
  }

  TEST_CASE("select_best") {
    const Instance inst = testing_helpers::mnl_line({1.0, 8.0}, {1.0, 1.0}, {0.6, 0.4});
    const std::vector<Placement> one{Placement(std::vector<ProductId>{0, 0})};
    CHECK(select_best(inst, one, make_plan(inst, 0.2, 0.1), 1).index == 0);
    CHECK_THROWS_AS(select_best(inst, std::vector<Placement>{}, make_plan(inst, 0.2, 0.1), 1),
                    std::domain_error);

    const std::vector<Placement> two{Placement(std::vector<ProductId>{0, 0}),
                                     Placement(std::vector<ProductId>{1, 1})};
    const double gap = oracle::w(inst, two[1]) - oracle::w(inst, two[0]);
    const double opt = *brute_force_placement(inst).w_exact;
    REQUIRE(gap > 2 * 0.2 * opt);
    const EstimationPlan plan = make_plan(inst, 0.2, 0.1, std::nullopt, two.size());
    int right = 0;
    for (int t = 0; t < 200; ++t) right += select_best(inst, two, plan, t).index == 1 ? 1 : 0;
    CHECK(right >= 160);
  }
}
