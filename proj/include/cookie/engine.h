#pragma once

// Continuous-time executor. Every purchase in a Strategy happens the instant
// it becomes affordable; after the last purchase the game only waits.

#include <optional>
#include <span>
#include <vector>

#include "cookie/model.h"

namespace cookie {

struct PurchaseEvent {
  Number time;
  std::size_t item = 0;
  Number price;
  Number rate_after;
  Number cookies_after;  // leftover cookies right after paying
};

struct SimReport {
  std::vector<PurchaseEvent> purchases;  // executed purchases only
  Number buying_phase_end;
  std::optional<Number> total_time;  // nullopt means Unreachable
  Number final_rate;
  // Set when the goal was met (or the budget ran out) before the whole
  // strategy executed; remaining purchases are dropped.
  bool truncated = false;
  // Cookies or rate held at T for a TimeBudget goal.
  std::optional<Number> budget_value;

  bool reachable() const { return total_time.has_value(); }
};

// One purchase of `item`, made as soon as it is affordable. Returns nullopt
// when the rate is zero and the price exceeds the cookies on hand.
std::optional<GameState> advance(const GameState& state, std::size_t item, const Instance& inst);

// B(seq): time spent in the Buying Phase starting from z cookies at rate r.
// Throws SolverError if a purchase can never be afforded.
Number buy_time(const Strategy& seq, const Instance& inst);
Number buy_time_from(const Strategy& seq, const Instance& inst, const GameState& start);

SimReport simulate(const Strategy& seq, const Instance& inst);

// Same as simulate but waits delays[j] extra seconds after purchase j
// becomes affordable. Missing entries mean no delay.
SimReport simulate_with_delays(const Strategy& seq, const Instance& inst,
                               std::span<const Number> delays);

struct PriceBounds {
  Number lower;  // sum(prices) / (G + sum(x))
  Number upper;  // sum(prices) / G
};

// Bounds on B(seq) from 0 cookies at rate G with counts starting at zero.
// The true time satisfies lower < B <= upper.
PriceBounds lemma2_bounds(const Strategy& seq, const Number& G, const Instance& inst);

// Time to buy seq from 0 cookies at rate G with zero counts (the quantity
// bounded by lemma2_bounds).
Number buy_time_at_rate(const Strategy& seq, const Number& G, const Instance& inst);

}  // namespace cookie
