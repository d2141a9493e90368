#pragma once

// Closed forms, stopping rules and structural thresholds.

#include <cstddef>
#include <span>
#include <vector>

#include "cookie/model.h"

namespace cookie {

struct OneItemSolution {
  std::size_t k_star = 0;
  Number total_time;
  bool tie_at_boundary = false;  // k_star - 1 copies take exactly as long
};

struct TwoItemThresholds {
  Number t_swap;       // rate at which the preferred order of the two items flips
  Number f_value;
  Number m_threshold;  // (f + 2) * y1; above it no item-1 follows item 2
  bool m_sufficient = false;
  // Rate goal: trailing item-1 run is at most n = ceil(x2/x1) * m copies
  // once R exceeds r_prime + n * x1.
  std::size_t trailing_ones_bound = 0;
  std::size_t replacement_copies = 0;  // m
  Number r_prime;
};

// Buying (price, x) at rate G beats waiting for M iff M/price >= 1 + G/x.
// Equality counts as buy.
bool should_buy(const Number& G, const Number& price, const Number& x, const Number& M);

// max_i(M x_i / y_i - x_i) with y_i the current prices; stop buying above it.
Number stop_rate_threshold(std::span<const Item> items_at_current_price, const Number& M);

// Exact optimum for k = 1, z = 0 and a Cookies or Rate goal. Ties resolve
// to the larger count.
OneItemSolution solve_one_item(const Instance& inst);

// Total time of buying `count` copies of the single item, then waiting.
Number one_item_time(const Instance& inst, std::size_t count);

// The expository harmonic-sum approximation, (y/x)(ln(M/y)+1) for the
// Cookies goal and (y/x) ln ceil((R-r)/x) for the Rate goal. Estimate only.
double one_item_time_estimate(const Instance& inst);

Number efficiency_score(const Number& price, const Number& x, const Number& G);

TwoItemThresholds two_item_thresholds(const Item& i1, const Item& i2, const Number& M);

// Q * x with Q the positive root of q^2 + 2q = 1/(alpha - 1).
Number phase1_rate_threshold(const Number& alpha, const Number& x);
// Max over items with alpha > 1; items with alpha = 1 are skipped.
Number phase1_rate_threshold(std::span<const Item> items);

// ceil(j log(j alpha1) / log(alpha2) + 1), j = ceil(x2/x1).
std::size_t trailing_run_bound(const Number& x1, const Number& x2, const Number& alpha1,
                               const Number& alpha2);

// Per-item upper bound on the copies any optimal strategy buys. Cookies
// goal: copies priced below M, and copies bought at a rate not above
// max_i M x_i / y_i (minus x_i when z = 0). Rate goal: ceil((R - r)/x_i).
std::vector<std::size_t> purchase_caps(const Instance& inst);

// Cookies goal only: no optimal strategy buys anything while its rate
// exceeds this value.
Number purchase_rate_cap(const Instance& inst);

}  // namespace cookie
