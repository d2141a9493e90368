// Acceptance checks. `acceptance --criterion N` runs one criterion and
// prints a single PASS/FAIL line; without arguments all nine run.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "cookie/analytic.h"
#include "cookie/engine.h"
#include "cookie/json_io.h"
#include "cookie/oracle.h"
#include "cookie/reductions.h"
#include "cookie/solvers.h"
#include "testutil.h"

using namespace cookie;
using testutil::E;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ------------------------------------------------------------------ 1

Outcome figure2() {
  auto t0 = Clock::now();
  Instance inst = testutil::make({{10, 72, E(1)}, {100, 700, E(1)}}, E(60000));
  auto rows = prefix_sweep(inst, 400);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].total_time < rows[arg].total_time) arg = i;
  TwoItemThresholds th = two_item_thresholds(inst.items[0], inst.items[1], inst.goal.value);
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << "argmin r=" << rows[arg].r << " rate=" << rows[arg].rate_at_switch.str() << " T_swap=" << th.t_swap.str()
    << " time=" << rows[arg].total_time.to_double() << " (" << secs << " s)";
  return {rows[arg].r == 161 && rows[arg].rate_at_switch == E(1611) && th.t_swap == E(3140) && secs < 5, d.str()};
}

// ------------------------------------------------------------------ 2

Outcome worked_example() {
  auto t0 = Clock::now();
  Instance inst = testutil::make({{10, 80, E(6, 5)}, {90, 800, E(11, 10)}}, E(100000));
  inst = to_mode(inst, NumericMode::Float);
  Solution g = solve_greedy(inst, GreedyPolicy::EfficiencyScore);
  Solution dp = solve_tuple_dp(inst);
  const std::vector<std::size_t> head{0, 0, 0, 0, 0, 0, 1, 1};
  bool prefix = g.strategy.size() >= 8 &&
                std::equal(head.begin(), head.end(), g.strategy.purchases.begin());
  // The optimum printed alongside the example.
  const std::vector<std::size_t> printed{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                                         1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1};
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << "greedy " << format_one_based(g.strategy) << " t=" << g.total_time.str(10) << "; dp "
    << format_one_based(dp.strategy) << " (" << dp.strategy.size() << " purchases) t=" << dp.total_time.str(10);
  if (dp.strategy.purchases != printed) d << "; dp sequence differs from the printed optimum";
  d << " (" << secs << " s)";
  return {prefix && dp.strategy.size() == 30 && less_or_equal_tol(dp.total_time, g.total_time) && secs < 30, d.str()};
}

// ------------------------------------------------------------------ 3

Outcome oracle_equivalence() {
  auto t0 = Clock::now();
  cookie::Rng rng(20240601);
  const Number alphas[] = {E(1), E(2), E(3, 2)};
  std::size_t tested = 0, rejected = 0, fixed_checked = 0, failures = 0;
  std::string first_failure;
  while (tested < 200) {
    Instance inst;
    inst.z = E(0);
    inst.r = E(rng.between(1, 3));
    std::size_t k = 1 + rng.below(3);
    for (std::size_t i = 0; i < k; ++i)
      inst.items.push_back({E(rng.between(1, 20)), E(rng.between(1, 20)), alphas[rng.below(3)]});
    if (rng.below(4) == 0)
      inst.goal = Goal::rate(inst.r + E(rng.between(1, 20)));
    else
      inst.goal = Goal::cookies(E(rng.between(1, 200)));
    OracleOptions o;
    o.budget = 1'000'000;
    OracleResult orc;
    try {
      orc = brute_force_continuous(inst, std::nullopt, o);
    } catch (const BudgetExceeded&) {
      ++rejected;
      continue;
    }
    ++tested;
    Number tuple = solve_tuple_dp(inst).total_time;
    bool ok = orc.best_time && *orc.best_time == tuple;
    if (all_fixed_cost(inst)) {
      ++fixed_checked;
      ok = ok && solve_fixed_dp(inst).total_time == tuple;
    }
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = to_json(inst).dump();
    }
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << tested << " instances (" << fixed_checked << " also fixed-dp, " << rejected
    << " regenerated over the oracle budget), " << failures << " disagreements (" << secs << " s)";
  if (!first_failure.empty()) d << " first: " << first_failure;
  return {failures == 0 && secs < 600, d.str()};
}

// ------------------------------------------------------------------ 4

Outcome lemma_properties() {
  cookie::Rng rng(4242);
  std::size_t pairs = 0, sandwich_fail = 0, delay_fail = 0, delay_checked = 0;
  while (pairs < 1000) {
    Instance inst = testutil::random_instance(rng, 1 + rng.below(3), 5, 200);
    Strategy s;
    std::size_t len = 1 + rng.below(6);
    for (std::size_t j = 0; j < len; ++j) s.purchases.push_back(rng.below(inst.k()));
    ++pairs;
    Number G = E(rng.between(1, 20));
    PriceBounds b = lemma2_bounds(s, G, inst);
    Number t = buy_time_at_rate(s, G, inst);
    if (!(b.lower < t && t <= b.upper)) ++sandwich_fail;

    std::vector<Number> delays;
    for (std::size_t j = 0; j < s.size(); ++j) delays.push_back(E(rng.between(0, 5), rng.between(1, 4)));
    // Delays can let the goal arrive before later purchases, so the ASAP
    // side replays exactly the purchases the delayed run executed.
    SimReport late = simulate_with_delays(s, inst, delays);
    if (!late.reachable()) continue;
    ++delay_checked;
    Strategy done{std::vector<std::size_t>(s.purchases.begin(), s.purchases.begin() + late.purchases.size())};
    SimReport base = simulate(done, inst);
    if (!base.reachable() || *late.total_time < *base.total_time) ++delay_fail;
  }
  std::ostringstream d;
  d << pairs << " pairs, sandwich violations " << sandwich_fail << ", delay-dominance violations " << delay_fail << " of "
    << delay_checked << " reachable runs";
  return {sandwich_fail == 0 && delay_fail == 0, d.str()};
}

// ------------------------------------------------------------------ 5

Outcome no_trailing_ones() {
  cookie::Rng rng(777);
  std::size_t tested = 0, violations = 0;
  while (tested < 100) {
    Item a{E(rng.between(1, 20)), E(rng.between(1, 20)), E(1)};
    Item b{E(rng.between(1, 20)), E(rng.between(1, 40)), E(1)};
    if (!(b.y > a.y) || !(b.x / b.y > a.x / a.y)) continue;
    TwoItemThresholds th = two_item_thresholds(a, b, E(0));
    Number M = (th.m_threshold * E(rng.between(100, 300), 100)).ceil();
    Instance inst;
    inst.z = E(0);
    inst.r = E(1);
    inst.items = {a, b};
    inst.goal = Goal::cookies(M);
    Strategy s = solve_fixed_dp(inst).strategy;
    ++tested;
    bool seen_two = false;
    for (auto i : s.purchases) {
      if (i == 1) seen_two = true;
      if (i == 0 && seen_two) {
        ++violations;
        break;
      }
    }
  }
  std::ostringstream d;
  d << tested << " instances with M >= M_threshold, " << violations << " with an item 1 after item 2";
  return {violations == 0, d.str()};
}

// ------------------------------------------------------------------ 6

template <class F>
void for_each_multiset(std::size_t len, std::int64_t max_value, F f) {
  std::vector<std::int64_t> a(len, 1);
  while (true) {
    f(a);
    std::size_t i = len;
    while (i > 0 && a[i - 1] == max_value) --i;
    if (i == 0) return;
    ++a[i - 1];
    for (std::size_t j = i; j < len; ++j) a[j] = a[i - 1];
  }
}

Outcome reductions_sound() {
  auto t0 = Clock::now();
  std::size_t checked = 0, odd = 0, disagree = 0;
  std::string first;
  for (std::size_t k = 1; k <= 6; ++k)
    for_each_multiset(k, 6, [&](const std::vector<std::int64_t>& a) {
      std::int64_t s = 0;
      for (auto v : a) s += v;
      if (s % 2) {
        ++odd;
        return;
      }
      for (auto make : {&reduce_partition_to_rate, &reduce_partition_to_initial_cookies}) {
        ++checked;
        VerifyResult v = verify_certificate(make({a}));
        if (!v.agree) {
          ++disagree;
          if (first.empty()) first = to_json(make({a})).at("kind").get<std::string>() + " " + Json(a).dump();
        }
      }
    });
  std::size_t three = 0, three_disagree = 0, groups_agree = 0;
  for_each_multiset(6, 5, [&](const std::vector<std::int64_t>& a) {
    ++three;
    VerifyResult v = verify_certificate(reduce_3partition_to_discrete(a, 2));
    if (!v.agree) {
      ++three_disagree;
      if (first.empty()) first = "3partition " + Json(a).dump();
    }
    if (v.equal_sum_groups && *v.equal_sum_groups == v.game_answer) ++groups_agree;
  });
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << "partition certificates " << checked << " (" << odd << " odd-sum multisets skipped), " << disagree
    << " disagreements; 3-partition " << three << ", " << three_disagree << " disagreements, game answer matches "
    << "equal-sum grouping in " << groups_agree << "/" << three << " (" << secs << " s)";
  if (!first.empty()) d << "; first: " << first;
  return {disagree == 0 && three_disagree == 0 && secs < 900, d.str()};
}

// ------------------------------------------------------------------ 7

Outcome ratio_trend() {
  double ratio[3];
  long long Ms[3] = {1000, 100000, 10000000};
  std::ostringstream d;
  for (int i = 0; i < 3; ++i) {
    Instance inst = testutil::make({{10, 80, E(6, 5)}, {90, 800, E(11, 10)}}, E(Ms[i]));
    inst = to_mode(inst, NumericMode::Float);
    Number g = solve_greedy(inst, GreedyPolicy::EfficiencyScore).total_time;
    Number opt = solve_tuple_dp(inst).total_time;
    ratio[i] = (g / opt).to_double();
    d << "ratio(" << Ms[i] << ")=" << std::setprecision(9) << ratio[i] << ' ';
  }
  // At M = 1000 greedy is already optimal; confirm with the oracle.
  Instance small = testutil::make({{10, 80, E(6, 5)}, {90, 800, E(11, 10)}}, E(1000));
  bool greedy_opt = *brute_force_continuous(small).best_time ==
                    solve_greedy(small, GreedyPolicy::EfficiencyScore).total_time;
  d << (greedy_opt ? "(greedy is exactly optimal at M=1000 per the oracle)" : "");
  return {ratio[2] < ratio[1] && ratio[1] < ratio[0] && ratio[2] < 1.05, d.str()};
}

// ------------------------------------------------------------------ 8

Outcome closed_form() {
  cookie::Rng rng(8888);
  std::size_t tested = 0, mismatches = 0;
  std::string first;
  while (tested < 500) {
    bool rate_goal = tested % 2 == 1;
    bool growing = (tested / 2) % 2 == 1;
    Instance inst;
    inst.z = E(0);
    inst.r = E(rng.between(1, 5));
    Number alpha = growing ? E(rng.between(11, 30), 10) : E(1);
    inst.items = {{E(rng.between(1, 20)), E(rng.between(1, 40)), alpha}};
    inst.goal = rate_goal ? Goal::rate(inst.r + E(rng.between(1, 60))) : Goal::cookies(E(rng.between(1, 1000)));
    ++tested;
    OneItemSolution cf = solve_one_item(inst);
    // Exhaustive argmin by simulation; the largest minimiser wins ties.
    std::optional<Number> best;
    std::size_t best_k = 0;
    const std::size_t limit = std::max<std::size_t>(80, purchase_caps(inst)[0] + 5);
    for (std::size_t c = 0; c <= limit; ++c) {
      SimReport rep = simulate(Strategy{std::vector<std::size_t>(c, 0)}, inst);
      // Copies past the goal are never executed; skip padded strategies.
      if (!rep.total_time || rep.purchases.size() != c) continue;
      auto t = rep.total_time;
      if (!best || *t <= *best) {
        best = t;
        best_k = c;
      }
    }
    if (!best || *best != cf.total_time || best_k != cf.k_star) {
      ++mismatches;
      if (first.empty()) first = to_json(inst).dump();
    }
  }
  Instance tie = testutil::make({{1, 10, E(1)}}, E(100));
  OneItemSolution t = solve_one_item(tie);
  bool tie_ok = t.k_star == 9 && t.tie_at_boundary && t.total_time == E(9649, 252) &&
                *simulate(Strategy{std::vector<std::size_t>(8, 0)}, tie).total_time == t.total_time;
  std::ostringstream d;
  d << tested << " one-item instances, " << mismatches << " mismatches; (1,10,100) tie k=8/9 -> k_star=" << t.k_star;
  if (!first.empty()) d << "; first: " << first;
  return {mismatches == 0 && tie_ok, d.str()};
}

// ------------------------------------------------------------------ 9

Outcome local_trap() {
  Json j = read_json_file(testutil::data_path("local_trap.json"));
  Instance inst = instance_from_json(j);
  const Json& ls = j.at("local_search");
  SolveOptions o;
  o.seed = ls.at("seed").get<std::uint64_t>();
  o.iterations = ls.at("iterations").get<std::size_t>();
  o.start = ls.at("start") == "random" ? LocalSearchStart::Random : LocalSearchStart::Greedy;
  Solution a = solve_local_search(inst, o);
  Solution b = solve_local_search(inst, o);
  OracleOptions oo;
  oo.cutoff = a.total_time;
  oo.dominance_pruning = true;
  OracleResult orc = brute_force_continuous(inst, std::nullopt, oo);
  bool reproducible = a.strategy == b.strategy && a.total_time == b.total_time;
  std::ostringstream d;
  d << "local search " << format_one_based(a.strategy) << " t=" << a.total_time.str(12) << " vs oracle "
    << format_one_based(orc.best_strategy) << " t=" << (orc.best_time ? orc.best_time->str(12) : "-")
    << (reproducible ? " (reproducible)" : " (NOT reproducible)");
  return {reproducible && orc.best_time && a.total_time > *orc.best_time, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::function<Outcome()> criteria[] = {figure2,         worked_example, oracle_equivalence,
                                               lemma_properties, no_trailing_ones, reductions_sound,
                                               ratio_trend,     closed_form,    local_trap};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) which.push_back(std::stoi(argv[++i]));
  if (which.empty())
    for (int n = 1; n <= 9; ++n) which.push_back(n);
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > 9) {
      std::cerr << "no criterion " << n << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
