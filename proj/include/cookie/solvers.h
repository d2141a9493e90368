#pragma once

// Optimal and heuristic purchase-sequence solvers.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cookie/model.h"

namespace cookie {

enum class Method {
  FixedDP,
  TupleDP,
  TwoItemStructured,
  GreedyRatio,
  GreedyEfficiency,
  LocalSearch,
  Oracle,
  ClosedForm,
};

// CLI spellings: fixed-dp, tuple-dp, two-item, greedy-ratio, greedy-eff,
// local, oracle, closed-form.
std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct Solution {
  Strategy strategy;
  Number total_time;  // always simulate(strategy).total_time
  Method method = Method::FixedDP;
  bool optimal = false;
};

struct DPStats {
  std::size_t states_visited = 0;
  std::size_t memo_size = 0;
  std::vector<std::size_t> peak_bound_per_item;  // N_i = cap_i + 1
};

class StateSpaceExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

// A Rate goal the solver cannot reach (zero rate, nothing affordable).
class Unreachable : public SolverError {
 public:
  using SolverError::SolverError;
};

enum class GreedyPolicy { RatioXY, EfficiencyScore };
enum class LocalSearchStart { Greedy, Random };

struct SolveOptions {
  std::size_t state_cap = 100'000'000;   // tuple DP: max product of N_i
  std::uint64_t seed = 0;
  std::size_t iterations = 2000;         // local search random moves
  std::size_t stall_limit = 200;         // non-improving moves before a full scan
  LocalSearchStart start = LocalSearchStart::Greedy;
  bool validate = false;                 // two-item: exhaustive s-scan cross-check
  std::size_t oracle_budget = 10'000'000;
};

Solution solve_fixed_dp(const Instance& inst, DPStats* stats = nullptr);
Solution solve_tuple_dp(const Instance& inst, const SolveOptions& opts = {},
                        DPStats* stats = nullptr);

// Searches strategies of the form 1^r 2^s. `mismatches` receives how many
// r values had a unimodal-search answer worse than the exhaustive scan
// (validation mode only; the exhaustive answer is the one used).
Solution solve_two_item_structured(const Instance& inst, const SolveOptions& opts = {},
                                   std::size_t* mismatches = nullptr);

Solution solve_greedy(const Instance& inst, GreedyPolicy policy);
Solution solve_local_search(const Instance& inst, const SolveOptions& opts = {});

// Solution from the one-item closed form.
Solution solve_closed_form(const Instance& inst);

// Any method on a Cookies or Rate goal.
Solution solve(const Instance& inst, Method method, const SolveOptions& opts = {},
               DPStats* stats = nullptr);

struct BudgetResult {
  Number best_value;  // cookies held (or rate reached) at T by `solution`
  Number goal_found;  // largest M (or R) the inner solver met within T
  Solution solution;
};

// Largest M (or R) whose `inner` solution finishes by T: doubling then
// bisection, at most 64 bisection steps.
BudgetResult solve_time_budget(const Instance& inst, Method inner, const SolveOptions& opts = {});

// Integer rates for the fixed-cost DP: multiplies r and every x by the LCM
// of their denominators. Times on the scaled instance are `factor` times
// smaller; strategies are unchanged.
struct RateRescaling {
  Instance scaled;
  Number factor;
  Number estimated_states;  // rate values the DP may touch
};
RateRescaling integer_rate_rescaling(const Instance& inst);

struct SweepRow {
  std::size_t r = 0;
  Number total_time;
  Number rate_at_switch;
  std::size_t best_s = 0;
};

// min over s of the time of 1^r 2^s followed by waiting, for r = 0..r_max.
// Needs two fixed-cost items, z = 0 and a Cookies goal.
std::vector<SweepRow> prefix_sweep(const Instance& inst, std::size_t r_max);

// Deterministic RNG for local search and test generators: mt19937_64 with a
// hand-rolled bounded draw so sequences do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  std::int64_t between(std::int64_t lo, std::int64_t hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

}  // namespace cookie
