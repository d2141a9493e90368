#pragma once

// Discrete-timestep game: income is credited at the start of every step,
// then that step's purchases happen in order. Income from a purchase starts
// with the next step.

#include <cstdint>
#include <vector>

#include "cookie/model.h"

namespace cookie {

struct DiscreteInstance {
  Number r;                 // income per step
  std::vector<Item> items;  // integer x, y; integer alpha
  Number M;                 // cookie goal
  std::int64_t T = 0;       // deadline in steps
  // Every cookie quantity was multiplied by this to make it integral (the
  // 3-PARTITION construction can produce fractional parameters).
  Number cookie_scale = Number::exact(1);
};

// steps[t] lists the item indices bought in step t + 1.
struct Schedule {
  std::vector<std::vector<std::size_t>> steps;
};

struct DiscreteOutcome {
  Number cookies_at_T;
  bool feasible = true;
};

// Throws InvalidInstance unless r, M, x, y, alpha are non-negative integers
// (x, y, M positive, alpha >= 1) and T >= 0.
void require_valid(const DiscreteInstance& d);

DiscreteOutcome simulate_discrete(const DiscreteInstance& d, const Schedule& s);

// Exact yes/no: can M cookies be held by the end of step T?
bool decide_discrete(const DiscreteInstance& d, std::size_t budget = 10'000'000);

}  // namespace cookie
