#pragma once

// Exhaustive reference solvers. Nothing here shares code with the engine or
// the DP solvers so they can be checked against each other.

#include <cstdint>
#include <optional>
#include <vector>

#include "cookie/discrete.h"
#include "cookie/model.h"

namespace cookie {

class BudgetExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

struct OracleOptions {
  std::size_t budget = 10'000'000;  // max sequences (search nodes) visited
  // Skip every prefix whose clock already exceeds this. Exact for "is the
  // optimum <= cutoff" questions; the reported optimum is then only
  // meaningful when it is <= cutoff.
  std::optional<Number> cutoff;
  // Stop as soon as a strategy with time <= stop_at is found.
  std::optional<Number> stop_at;
  // Prune a prefix whose count vector was already reached no later and with
  // at least as many cookies. Sound for the optimum, but optimal_count then
  // undercounts ties.
  bool dominance_pruning = false;
};

struct OracleResult {
  Strategy best_strategy;
  std::optional<Number> best_time;  // nullopt: nothing reaches the goal
  std::size_t sequences_explored = 0;
  std::size_t optimal_count = 0;  // strategies tying best_time
};

// Enumerates every purchase sequence within `per_item_caps` (default: the
// proven purchase caps) in lexicographic order; the first strict minimum is
// kept. Cookies or Rate goals only.
OracleResult brute_force_continuous(const Instance& inst,
                                    std::optional<std::vector<std::size_t>> per_item_caps = {},
                                    const OracleOptions& opts = {});

// Is some strategy done within `threshold`? Uses cutoff, early stop and
// dominance pruning.
bool oracle_decides_within(const Instance& inst, const Number& threshold,
                           std::optional<std::vector<std::size_t>> per_item_caps = {},
                           std::size_t budget = 10'000'000);

struct DiscreteDecision {
  bool yes = false;
  Schedule witness;  // when yes
  std::size_t states_explored = 0;
};

DiscreteDecision brute_force_discrete(const DiscreteInstance& d, std::size_t budget = 10'000'000);

}  // namespace cookie
