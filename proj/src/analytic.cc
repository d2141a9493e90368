#include "cookie/analytic.h"

#include <algorithm>
#include <cmath>

namespace cookie {

namespace {

Number one() { return Number::exact(1); }

// Float-mode integer bounds get a relative slack so rounding can only make
// them looser.
std::size_t floor_bound(const Number& v) {
  if (v.sign() < 0) return 0;
  if (v.is_exact()) return static_cast<std::size_t>(v.floor().to_integer());
  double d = v.to_double();
  return static_cast<std::size_t>(std::floor(d * (1 + 1e-9) + 1e-9));
}

std::size_t ceil_bound(const Number& v) {
  if (v.sign() <= 0) return 0;
  if (v.is_exact()) return static_cast<std::size_t>(v.ceil().to_integer());
  double d = v.to_double();
  return static_cast<std::size_t>(std::ceil(d * (1 + 1e-9) + 1e-12));
}

// Integer rounding that snaps float values within tolerance of an integer.
long long floor_tol(const Number& v) {
  if (v.is_exact()) return v.floor().to_integer();
  double d = v.to_double();
  double nearest = std::round(d);
  if (std::fabs(d - nearest) <= std::max(kAbsTol, kRelTol * std::fabs(d))) return static_cast<long long>(nearest);
  return static_cast<long long>(std::floor(d));
}

long long ceil_tol(const Number& v) {
  if (v.is_exact()) return v.ceil().to_integer();
  double d = v.to_double();
  double nearest = std::round(d);
  if (std::fabs(d - nearest) <= std::max(kAbsTol, kRelTol * std::fabs(d))) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(d));
}

void require_single_item(const Instance& inst) {
  if (inst.items.size() != 1) throw PreconditionError("one-item solver needs exactly one item");
  if (!inst.z.is_zero()) throw PreconditionError("one-item closed form assumes z = 0");
  if (inst.goal.kind == GoalKind::TimeBudget)
    throw PreconditionError("one-item closed form needs a Cookies or Rate goal");
}

}  // namespace

bool should_buy(const Number& G, const Number& price, const Number& x, const Number& M) {
  // M/price >= 1 + G/x  <=>  M x >= price (x + G), all quantities positive.
  return compare_tol(M * x, price * (x + G)) >= 0;
}

Number stop_rate_threshold(std::span<const Item> items, const Number& M) {
  if (items.empty()) throw PreconditionError("stop threshold needs at least one item");
  std::optional<Number> best;
  for (const Item& it : items) {
    Number v = M * it.x / it.y - it.x;
    if (!best || *best < v) best = v;
  }
  return *best;
}

Number one_item_time(const Instance& inst, std::size_t count) {
  const Item& it = inst.items.at(0);
  Number t = Number::exact(0).to_mode(inst.r.mode());
  Number rate = inst.r;
  Number price = it.y;
  for (std::size_t n = 0; n < count; ++n) {
    t += price / rate;
    rate += it.x;
    if (!it.fixed_cost()) price *= it.alpha;
  }
  if (inst.goal.kind == GoalKind::Cookies) t += inst.goal.value / rate;
  return t;
}

OneItemSolution solve_one_item(const Instance& inst) {
  require_single_item(inst);
  const Item& it = inst.items[0];
  const Number& goal = inst.goal.value;
  OneItemSolution sol;

  if (inst.goal.kind == GoalKind::Rate) {
    sol.k_star = static_cast<std::size_t>(std::max(0LL, ceil_tol((goal - inst.r) / it.x)));
    sol.total_time = one_item_time(inst, sol.k_star);
    return sol;
  }

  auto buys_at = [&](std::size_t k) {
    return should_buy(inst.r + it.x * Number::exact(static_cast<long long>(k)),
                      current_cost(it, k), it.x, goal);
  };
  std::size_t k = 0;
  if (it.fixed_cost()) {
    // Least integer k > M/y - 1 - r/x, then nudged against the exact test.
    Number v = goal / it.y - one() - inst.r / it.x;
    k = v.sign() < 0 ? 0 : floor_bound(v) + 1;
    while (k > 0 && !buys_at(k - 1)) --k;
  }
  while (buys_at(k)) ++k;
  sol.k_star = k;
  sol.total_time = one_item_time(inst, k);
  if (k > 0) sol.tie_at_boundary = approx_equal(one_item_time(inst, k - 1), sol.total_time);
  return sol;
}

double one_item_time_estimate(const Instance& inst) {
  require_single_item(inst);
  const Item& it = inst.items[0];
  double x = it.x.to_double(), y = it.y.to_double(), goal = inst.goal.value.to_double();
  if (inst.goal.kind == GoalKind::Rate)
    return (y / x) * std::log(std::ceil((goal - inst.r.to_double()) / x));
  return (y / x) * (std::log(goal / y) + 1.0);
}

Number efficiency_score(const Number& price, const Number& x, const Number& G) {
  return price / x + price / G;
}

TwoItemThresholds two_item_thresholds(const Item& i1, const Item& i2, const Number& M) {
  if (!(i2.y > i1.y)) throw AssumptionViolated("two-item analysis needs y2 > y1");
  if (!(i2.x / i2.y > i1.x / i1.y)) throw AssumptionViolated("two-item analysis needs x2/y2 > x1/y1");
  TwoItemThresholds t;
  Number gap = i1.y / i1.x - i2.y / i2.x;
  t.t_swap = (i2.y - i1.y) / gap;
  Number two = Number::exact(2);
  t.f_value = max(two, two / i1.x * (i1.y + i2.y) / gap);
  t.m_threshold = (t.f_value + two) * i1.y;
  t.m_sufficient = M >= t.m_threshold;

  Number ratio_gap = i2.x / i1.x - i2.y / i1.y;
  auto m = static_cast<std::size_t>(floor_tol(one() / ratio_gap) + 1);
  auto j = static_cast<std::size_t>(ceil_tol(i2.x / i1.x));
  t.replacement_copies = m;
  t.trailing_ones_bound = j * m;
  Number n_num = Number::exact(static_cast<long long>(t.trailing_ones_bound));
  Number m_num = Number::exact(static_cast<long long>(m));
  t.r_prime = m_num * n_num * i1.x * i2.y / (n_num * i1.y - m_num * i2.y);
  return t;
}

Number phase1_rate_threshold(const Number& alpha, const Number& x) {
  if (!(alpha > Number(1))) throw PreconditionError("phase-1 threshold needs alpha > 1");
  double a = alpha.to_double();
  double q = -1.0 + std::sqrt(1.0 + 1.0 / (a - 1.0));
  return Number(q * x.to_double());
}

Number phase1_rate_threshold(std::span<const Item> items) {
  Number best(0.0);
  for (const Item& it : items)
    if (it.alpha > Number(1)) best = max(best, phase1_rate_threshold(it.alpha, it.x));
  return best;
}

std::size_t trailing_run_bound(const Number& x1, const Number& x2, const Number& alpha1,
                               const Number& alpha2) {
  if (x1.sign() <= 0 || x2.sign() <= 0) throw PreconditionError("rate gains must be positive");
  if (!(alpha1 > Number(1)) || !(alpha2 > Number(1)))
    throw PreconditionError("trailing-run bound needs alpha > 1 for both items");
  auto j = static_cast<double>(ceil_tol(x2 / x1));
  double v = j * std::log(j * alpha1.to_double()) / std::log(alpha2.to_double()) + 1.0;
  return static_cast<std::size_t>(std::ceil(v));
}

std::vector<std::size_t> purchase_caps(const Instance& inst) {
  std::vector<std::size_t> caps(inst.items.size(), 0);
  const Number& goal = inst.goal.value;
  if (inst.goal.kind == GoalKind::Rate) {
    for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = ceil_bound((goal - inst.r) / inst.items[i].x);
    return caps;
  }
  if (inst.goal.kind != GoalKind::Cookies)
    throw PreconditionError("purchase caps need a Cookies or Rate goal");

  const Number rate_cap = purchase_rate_cap(inst);
  for (std::size_t i = 0; i < caps.size(); ++i) {
    const Item& it = inst.items[i];
    std::size_t by_rate = rate_cap < inst.r ? 0 : floor_bound((rate_cap - inst.r) / it.x) + 1;
    std::size_t n = 0;
    // A copy priced at M or more can only be afforded after the goal is met.
    while (n < by_rate) {
      Number price = current_cost(it, n);
      bool below = price.is_exact() && goal.is_exact() ? price < goal : compare_tol(price, goal) <= 0;
      if (!below) break;
      ++n;
      if (it.fixed_cost()) {
        n = by_rate;
        break;
      }
    }
    caps[i] = n;
  }
  return caps;
}

Number purchase_rate_cap(const Instance& inst) {
  if (inst.goal.kind != GoalKind::Cookies) throw PreconditionError("rate cap needs a Cookies goal");
  // Every purchase of an optimal strategy happens at a rate no higher than
  // the rate before its last purchase, which is at most max_i M x_i / y_i
  // (or that minus x_i when starting from zero cookies).
  std::optional<Number> cap;
  for (const Item& it : inst.items) {
    Number v = inst.goal.value * it.x / it.y;
    if (inst.z.is_zero()) v -= it.x;
    if (!cap || *cap < v) cap = v;
  }
  if (!inst.r.is_exact() || !cap->is_exact()) *cap = *cap * Number(1 + 1e-9) + Number(1e-9);
  return *cap;
}

}  // namespace cookie
