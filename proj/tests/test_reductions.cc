#include <doctest.h>

#include "cookie/oracle.h"
#include "cookie/reductions.h"
#include "testutil.h"

using namespace cookie;
using testutil::E;

TEST_CASE("combinatorial checkers") {
  CHECK(has_partition({1, 2, 3}));
  CHECK_FALSE(has_partition({3, 3, 3, 5}));
  CHECK_FALSE(has_partition({2}));
  CHECK(has_3partition({1, 1, 1, 1, 1, 1}, 2));
  CHECK_FALSE(has_3partition({1, 1, 1, 1, 1, 7}, 2));
  CHECK_FALSE(has_3partition({1, 1, 1, 1, 3, 5}, 2));
  CHECK(has_equal_sum_groups({1, 1, 1, 1, 3, 5}, 2));
}

TEST_CASE("partition to rate: construction") {
  ReductionCertificate c = reduce_partition_to_rate({{1, 2, 3}});
  REQUIRE(c.game);
  CHECK(c.game->goal.kind == GoalKind::Rate);
  CHECK(c.game->goal.value.str() == "16/13");
  CHECK(c.threshold_time.str() == "3");
  CHECK(c.game->items[0].x.str() == "1/13");
  CHECK(c.game->items[2].y.str() == "3");

  ReductionCertificate d = reduce_partition_to_rate({{3, 3, 3, 5}});
  CHECK(d.game->goal.value.str() == "64/57");
  CHECK(d.threshold_time.str() == "7");
}

TEST_CASE("partition to rate: verification") {
  VerifyResult yes = verify_certificate(reduce_partition_to_rate({{1, 2, 3}}));
  CHECK(yes.source_answer);
  CHECK(yes.game_answer);
  CHECK(yes.agree);
  VerifyResult no = verify_certificate(reduce_partition_to_rate({{3, 3, 3, 5}}));
  CHECK_FALSE(no.source_answer);
  CHECK(no.agree);
}

TEST_CASE("partition input errors") {
  CHECK_THROWS_AS(reduce_partition_to_rate({{1, 2}}), OddSum);
  CHECK_THROWS_AS(reduce_partition_to_initial_cookies({{1, 2}}), OddSum);
  CHECK_THROWS_AS(reduce_partition_to_rate({{}}), InputError);
}

TEST_CASE("single element partition is a NO instance") {
  VerifyResult v = verify_certificate(reduce_partition_to_rate({{2}}));
  CHECK_FALSE(v.source_answer);
  CHECK_FALSE(v.game_answer);
}

TEST_CASE("partition to initial cookies") {
  ReductionCertificate c = reduce_partition_to_initial_cookies({{1, 2, 3}});
  REQUIRE(c.game);
  CHECK(c.game->z.str() == "9003");
  CHECK(c.game->r.is_zero());
  CHECK(c.game->goal.value.str() == "9004");
  CHECK(c.threshold_time.str() == "9004/9003");
  CHECK(c.game->items.size() == 6);
  CHECK(verify_certificate(c).agree);

  ReductionCertificate d = reduce_partition_to_initial_cookies({{3, 3, 3, 5}});
  CHECK(d.game->z.str() == "28007");
  CHECK(d.game->goal.value.str() == "28008");
  VerifyResult v = verify_certificate(d);
  CHECK_FALSE(v.game_answer);
  CHECK(v.agree);
}

TEST_CASE("3-partition to discrete") {
  ReductionCertificate c = reduce_3partition_to_discrete({1, 1, 1, 1, 1, 1}, 2);
  REQUIRE(c.discrete_game);
  const DiscreteInstance& d = *c.discrete_game;
  CHECK(d.T == 28);
  CHECK((d.r / d.cookie_scale).str() == "39");
  CHECK((d.M / d.cookie_scale).str() == "1173");
  VerifyResult v = verify_certificate(c);
  CHECK(v.source_answer);
  CHECK(v.game_answer);

  VerifyResult no = verify_certificate(reduce_3partition_to_discrete({1, 1, 1, 1, 1, 7}, 2));
  CHECK_FALSE(no.source_answer);
  CHECK_FALSE(no.game_answer);

  CHECK_THROWS_AS(reduce_3partition_to_discrete({1, 1, 1, 1}, 2), NotTripletCount);
}

TEST_CASE("m to r") {
  Instance inst = testutil::make({{1, 10, E(1)}}, E(100));
  ReductionCertificate c = reduce_m_to_r(inst);
  REQUIRE(c.game);
  CHECK(c.game->items.size() == 2);
  CHECK(c.game->goal.kind == GoalKind::Rate);
  CHECK(c.game->items[1].y == E(100));
  CHECK(c.game->goal.value == c.game->items[1].x);
  VerifyResult v = verify_certificate(c);
  CHECK(v.agree);
  REQUIRE(v.source_time);
  CHECK(v.source_time->str() == "9649/252");
  CHECK(*v.game_time == *v.source_time);
}

TEST_CASE("m to r: nothing worth buying") {
  Instance inst = testutil::make({{1, 500, E(1)}}, E(100));
  VerifyResult v = verify_certificate(reduce_m_to_r(inst));
  CHECK(v.agree);
  CHECK(v.game_time->str() == "100");
}

TEST_CASE("m to r: scaled Fig. 2") {
  Instance inst = testutil::make({{10, 72, E(1)}, {100, 700, E(1)}}, E(600));
  VerifyResult v = verify_certificate(reduce_m_to_r(inst));
  CHECK(v.agree);
  CHECK(*v.game_time == *v.source_time);
}

TEST_CASE("reduction kind names") {
  for (auto k : {ReductionKind::PartitionToRate, ReductionKind::PartitionToInitialCookies,
                 ReductionKind::ThreePartitionToDiscrete, ReductionKind::MToR})
    CHECK(parse_reduction_kind(to_string(k)) == k);
}
