#include <doctest.h>

#include <cmath>

#include "cookie/analytic.h"
#include "cookie/engine.h"
#include "testutil.h"

using namespace cookie;
using testutil::E;

TEST_CASE("should_buy boundary cases") {
  CHECK(should_buy(E(9), E(10), E(1), E(100)));  // 10 >= 10
  CHECK_FALSE(should_buy(E(10), E(10), E(1), E(100)));
  CHECK(should_buy(E(1), E(72), E(10), E(60000)));
}

TEST_CASE("should_buy boundary really is a tie") {
  // Nine versus eight copies of (1,10,1) for M = 100.
  Instance inst = testutil::make({{1, 10, E(1)}}, E(100));
  CHECK(one_item_time(inst, 8) == one_item_time(inst, 9));
}

TEST_CASE("stop_rate_threshold") {
  std::vector<Item> items{{E(10), E(72), E(1)}, {E(100), E(700), E(1)}};
  CHECK(stop_rate_threshold(items, E(60000)).str() == "59300/7");
  std::vector<Item> single{{E(1), E(50), E(1)}};
  CHECK(stop_rate_threshold(single, E(50)).is_zero());
  std::vector<Item> five{{E(5), E(10), E(1)}};
  CHECK(stop_rate_threshold(five, E(10)).is_zero());
}

TEST_CASE("one item closed form: tie resolves to the larger count") {
  Instance inst = testutil::make({{1, 10, E(1)}}, E(100));
  OneItemSolution s = solve_one_item(inst);
  CHECK(s.k_star == 9);
  CHECK(s.tie_at_boundary);
  CHECK(s.total_time == E(10) * E(7129, 2520) + E(10));
  CHECK(s.total_time.str() == "9649/252");
}

TEST_CASE("one item closed form: rate goal and expensive item") {
  Instance rate = testutil::make({{10, 72, E(1)}}, E(101), true);
  CHECK(solve_one_item(rate).k_star == 10);
  Instance dear = testutil::make({{1, 10, E(2)}}, E(10));
  OneItemSolution s = solve_one_item(dear);
  CHECK(s.k_star == 0);
  CHECK(s.total_time.str() == "10");
}

TEST_CASE("one item closed form against a scan") {
  cookie::Rng rng(11);
  for (int n = 0; n < 60; ++n) {
    Instance inst = testutil::random_instance(rng, 1, 5, 300);
    OneItemSolution s = solve_one_item(inst);
    std::size_t limit = purchase_caps(inst)[0] + 5;
    Number best = one_item_time(inst, 0);
    for (std::size_t c = 1; c <= limit; ++c) {
      if (inst.goal.kind == GoalKind::Rate && !simulate(Strategy{std::vector<std::size_t>(c, 0)}, inst).reachable())
        continue;
      Number t = one_item_time(inst, c);
      if (t < best) best = t;
    }
    if (inst.goal.kind == GoalKind::Rate) {
      CHECK(s.total_time == one_item_time(inst, s.k_star));
    } else {
      INFO(inst.items[0].x.str(), " ", inst.items[0].y.str(), " ", inst.items[0].alpha.str(), " M=", inst.goal.value.str());
      CHECK(s.total_time == best);
    }
  }
}

TEST_CASE("harmonic estimate is in the right range") {
  Instance inst = testutil::make({{1, 10, E(1)}}, E(100));
  double est = one_item_time_estimate(inst);
  CHECK(est == doctest::Approx(10 * (std::log(10.0) + 1)));
  CHECK(std::abs(est / solve_one_item(inst).total_time.to_double() - 1) < 0.2);
}

TEST_CASE("efficiency score") {
  CHECK(efficiency_score(E(72), E(10), E(1)).str() == "396/5");  // 79.2
  CHECK(efficiency_score(E(700), E(100), E(1)).str() == "707");
  CHECK(efficiency_score(E(5), E(5), E(5)).str() == "2");
}

TEST_CASE("two item thresholds for the Fig. 2 items") {
  Item a{E(10), E(72), E(1)}, b{E(100), E(700), E(1)};
  TwoItemThresholds th = two_item_thresholds(a, b, E(60000));
  CHECK(th.t_swap.str() == "3140");
  CHECK(th.f_value.str() == "772");
  CHECK(th.m_threshold.str() == "55728");
  CHECK(th.m_sufficient);
  CHECK(th.trailing_ones_bound == 40);
  CHECK_FALSE(two_item_thresholds(a, b, E(1000)).m_sufficient);
}

TEST_CASE("two item thresholds in float mode") {
  Item a{Number(10), Number(72), Number(1)}, b{Number(100), Number(700), Number(1)};
  TwoItemThresholds th = two_item_thresholds(a, b, Number(60000));
  CHECK(th.t_swap.to_double() == doctest::Approx(3140));
  CHECK(th.trailing_ones_bound == 40);
}

TEST_CASE("two item standing assumptions") {
  Item a{E(1), E(10), E(1)}, b{E(2), E(20), E(1)};
  CHECK_THROWS_AS(two_item_thresholds(a, b, E(100)), AssumptionViolated);
  CHECK_THROWS_AS(two_item_thresholds(b, a, E(100)), AssumptionViolated);
}

TEST_CASE("phase-1 rate threshold") {
  CHECK(phase1_rate_threshold(Number(1.1), Number(90)).to_double() == doctest::Approx(90 * (-1 + std::sqrt(11.0))));
  CHECK(phase1_rate_threshold(E(2), E(1)).to_double() == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(phase1_rate_threshold(E(101), E(1)).to_double() == doctest::Approx(std::sqrt(1.01) - 1));
  std::vector<Item> items{{E(10), E(80), E(6, 5)}, {E(90), E(800), E(11, 10)}, {E(1), E(1), E(1)}};
  CHECK(phase1_rate_threshold(items).to_double() == doctest::Approx(90 * (std::sqrt(11.0) - 1)));
}

TEST_CASE("trailing run bound") {
  CHECK(trailing_run_bound(E(10), E(90), E(6, 5), E(11, 10)) == 226);
  CHECK(trailing_run_bound(E(1), E(1), E(2), E(2)) == 2);
}

TEST_CASE("purchase caps") {
  Instance fig2 = testutil::make({{10, 72, E(1)}, {100, 700, E(1)}}, E(60000));
  auto caps = purchase_caps(fig2);
  CHECK(caps == std::vector<std::size_t>{848, 85});
  CHECK(purchase_rate_cap(fig2).str() == "59300/7");

  Instance rate = testutil::make({{10, 72, E(1)}, {3, 5, E(2)}}, E(101), true);
  CHECK(purchase_caps(rate) == std::vector<std::size_t>{10, 34});
}
