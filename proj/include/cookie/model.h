#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cookie/number.h"

namespace cookie {

// Errors a caller can fix by changing its input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors raised while solving a well-formed input (CLI exit code 3).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstance : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Two-item standing assumptions (y2 > y1, x2/y2 > x1/y1) do not hold.
class AssumptionViolated : public SolverError {
 public:
  using SolverError::SolverError;
};

// A purchasable generator. The n-th copy (1-based) costs y * alpha^(n-1).
struct Item {
  Number x;      // rate gain
  Number y;      // base cost
  Number alpha;  // cost growth, >= 1

  bool fixed_cost() const { return alpha == Number(1); }
};

enum class GoalKind { Cookies, Rate, TimeBudget };
enum class BudgetTarget { Cookies, Rate };

struct Goal {
  GoalKind kind = GoalKind::Cookies;
  Number value;  // M, R or T depending on kind
  BudgetTarget maximize = BudgetTarget::Cookies;

  static Goal cookies(Number m) { return {GoalKind::Cookies, std::move(m), BudgetTarget::Cookies}; }
  static Goal rate(Number r) { return {GoalKind::Rate, std::move(r), BudgetTarget::Cookies}; }
  static Goal time_budget(Number t, BudgetTarget target) {
    return {GoalKind::TimeBudget, std::move(t), target};
  }
};

struct Instance {
  Number z = Number(0.0);  // initial cookies
  Number r = Number(1.0);  // initial rate
  std::vector<Item> items;
  Goal goal;

  std::size_t k() const { return items.size(); }
};

// The Buying Phase as 0-based item indices; waiting afterwards is implied.
struct Strategy {
  std::vector<std::size_t> purchases;

  std::size_t size() const { return purchases.size(); }
  bool empty() const { return purchases.empty(); }
  auto operator<=>(const Strategy&) const = default;
};

struct GameState {
  std::vector<std::size_t> counts;
  Number cookies;
  Number rate;
  Number clock;
};

enum class ViolationCode {
  NoItems,
  NegativeInitialCookies,
  NonPositiveInitialRate,
  NonPositiveRateGain,
  NonPositiveCost,
  AlphaBelowOne,
  NonPositiveGoal,
  RateGoalNotAboveInitial,
};

struct Violation {
  ViolationCode code;
  std::optional<std::size_t> item;
  std::string message;
};

std::string to_string(ViolationCode code);

// Every invariant violation, empty when valid. A zero initial rate is
// accepted only when the instance starts with cookies (the initial-cookies
// hardness construction uses r = 0).
std::vector<Violation> validate_instance(const Instance& inst);
// Throws InvalidInstance listing all violations.
void require_valid(const Instance& inst);

// Price of the (n+1)-th copy, y * alpha^n.
Number current_cost(const Item& item, std::size_t n);

// r + sum_i counts[i] * x_i.
Number rate_for_counts(const Instance& inst, std::span<const std::size_t> counts);

GameState initial_state(const Instance& inst);

NumericMode instance_mode(const Instance& inst);  // Exact only if every field is exact
Instance to_mode(const Instance& inst, NumericMode mode);

bool all_fixed_cost(const Instance& inst);

// 1-based labels as used in human-facing output, e.g. "[1,1,2]".
std::string format_one_based(const Strategy& s);

}  // namespace cookie
