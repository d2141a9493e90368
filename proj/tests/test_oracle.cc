#include <doctest.h>

#include "cookie/analytic.h"
#include "cookie/json_io.h"
#include "cookie/oracle.h"
#include "cookie/solvers.h"
#include "testutil.h"

using namespace cookie;
using testutil::E;

TEST_CASE("oracle: one item with two optimal counts") {
  Instance inst = testutil::make({{1, 10, E(1)}}, E(100));
  OracleResult r = brute_force_continuous(inst);
  REQUIRE(r.best_time);
  CHECK(r.best_time->str() == "9649/252");
  CHECK(r.optimal_count == 2);
  CHECK(*r.best_time == solve_one_item(inst).total_time);
}

TEST_CASE("oracle: nothing affordable is worth it") {
  Instance inst = testutil::make({{1, 500, E(1)}}, E(100));
  inst.r = E(4);
  OracleResult r = brute_force_continuous(inst);
  CHECK(r.best_strategy.empty());
  CHECK(r.best_time->str() == "25");
}

TEST_CASE("oracle: scaled Fig. 2 matches the fixed DP") {
  Instance inst = testutil::make({{10, 72, E(1)}, {100, 700, E(1)}}, E(600));
  CHECK(brute_force_continuous(inst).best_time.value() == solve_fixed_dp(inst).total_time);
}

TEST_CASE("oracle: budget") {
  Instance inst = testutil::make({{1, 2, E(1)}, {1, 3, E(1)}, {1, 4, E(1)}}, E(200));
  OracleOptions o;
  o.budget = 100;
  CHECK_THROWS_AS(brute_force_continuous(inst, std::nullopt, o), BudgetExceeded);
}

TEST_CASE("oracle: pruning options keep the optimum") {
  Instance inst = testutil::make({{3, 7, E(3, 2)}, {11, 19, E(1)}}, E(150));
  Number plain = *brute_force_continuous(inst).best_time;
  OracleOptions o;
  o.dominance_pruning = true;
  CHECK(*brute_force_continuous(inst, std::nullopt, o).best_time == plain);
  o.cutoff = plain;
  CHECK(*brute_force_continuous(inst, std::nullopt, o).best_time == plain);
  CHECK(oracle_decides_within(inst, plain));
  CHECK_FALSE(oracle_decides_within(inst, plain - E(1, 1000000)));
}

TEST_CASE("oracle fixtures agree with the DP solvers") {
  Json fx = read_json_file(testutil::data_path("oracle_fixtures.json"));
  REQUIRE(fx.at("fixtures").size() > 0);
  for (const Json& f : fx.at("fixtures")) {
    Instance inst = instance_from_json(f.at("instance"));
    Number expected = number_from_json(f.at("best_time"), "best_time");
    CHECK(*brute_force_continuous(inst).best_time == expected);
    CHECK(solve_tuple_dp(inst).total_time == expected);
  }
}

TEST_CASE("discrete brute force") {
  DiscreteInstance d;
  d.r = E(2);
  d.M = E(10);
  d.T = 5;
  CHECK(brute_force_discrete(d).yes);
  d.M = E(11);
  CHECK_FALSE(brute_force_discrete(d).yes);
}
