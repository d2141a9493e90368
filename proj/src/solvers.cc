#include "cookie/solvers.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "cookie/analytic.h"
#include "cookie/engine.h"
#include "cookie/oracle.h"

namespace cookie {

namespace {

Number zero_like(const Number& n) { return Number::exact(0).to_mode(n.mode()); }

Number simulated_time(const Strategy& s, const Instance& inst) {
  SimReport rep = simulate(s, inst);
  if (!rep.total_time) throw Unreachable("strategy does not reach the goal");
  return *rep.total_time;
}

Solution make_solution(Strategy s, const Instance& inst, Method m, bool optimal) {
  Number t = simulated_time(s, inst);
  return Solution{std::move(s), std::move(t), m, optimal};
}

void require_goal(const Instance& inst, const char* who) {
  if (inst.goal.kind == GoalKind::TimeBudget)
    throw PreconditionError(std::string(who) + " needs a Cookies or Rate goal (use the time-budget wrapper)");
}

// `a` strictly better than `b`; nullopt is +infinity.
bool better(const std::optional<Number>& a, const std::optional<Number>& b) {
  if (!a) return false;
  if (!b) return true;
  return definitely_less(*a, *b);
}

std::vector<std::size_t> bounds_plus_one(const std::vector<std::size_t>& caps) {
  std::vector<std::size_t> out(caps);
  for (auto& c : out) ++c;
  return out;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::FixedDP: return "fixed-dp";
    case Method::TupleDP: return "tuple-dp";
    case Method::TwoItemStructured: return "two-item";
    case Method::GreedyRatio: return "greedy-ratio";
    case Method::GreedyEfficiency: return "greedy-eff";
    case Method::LocalSearch: return "local";
    case Method::Oracle: return "oracle";
    case Method::ClosedForm: return "closed-form";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  for (Method m : {Method::FixedDP, Method::TupleDP, Method::TwoItemStructured, Method::GreedyRatio,
                   Method::GreedyEfficiency, Method::LocalSearch, Method::Oracle, Method::ClosedForm})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection sampling: discard the top partial block so every residue is
  // equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

// ---------------------------------------------------------------- fixed DP

Solution solve_fixed_dp(const Instance& inst, DPStats* stats) {
  require_valid(inst);
  require_goal(inst, "fixed-cost DP");
  if (!all_fixed_cost(inst)) throw PreconditionError("fixed-cost DP needs alpha = 1 for every item");
  if (!inst.r.is_integer()) throw PreconditionError("fixed-cost DP needs an integer initial rate (rescale first)");
  for (const Item& it : inst.items)
    if (!it.x.is_integer()) throw PreconditionError("fixed-cost DP needs integer rate gains (rescale first)");
  if (!inst.z.is_zero()) throw PreconditionError("fixed-cost DP assumes z = 0 (use the tuple DP)");

  const bool cookie_goal = inst.goal.kind == GoalKind::Cookies;
  const Number& goal = inst.goal.value;
  const long long r0 = inst.r.to_integer();
  std::vector<long long> xs;
  for (const Item& it : inst.items) xs.push_back(it.x.to_integer());

  // Rates above `top` never buy (Cookies) or are already done (Rate).
  long long top;
  if (cookie_goal) {
    Number cap = purchase_rate_cap(inst);
    top = cap < inst.r ? r0 - 1 : cap.floor().to_integer();
  } else {
    top = goal.ceil().to_integer() - 1;
  }
  const long long size = std::max<long long>(0, top - r0 + 1);
  if (size > 100'000'000) throw StateSpaceExceeded("fixed-cost DP rate range exceeds 1e8 states");

  std::vector<Number> dp(static_cast<std::size_t>(size));
  std::vector<int> choice(static_cast<std::size_t>(size), -1);
  std::vector<char> reachable(static_cast<std::size_t>(size), 1);
  auto value_at = [&](long long g) -> Number {
    if (g <= top) return dp[static_cast<std::size_t>(g - r0)];
    return cookie_goal ? goal / Number::exact(g) : zero_like(goal);
  };

  std::size_t visited = 0;
  for (long long g = top; g >= r0; --g) {
    ++visited;
    Number G = Number::exact(g);
    std::optional<Number> best;
    int arg = -1;
    if (cookie_goal) best = goal / G;
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
      Number cand = inst.items[i].y / G + value_at(g + xs[i]);
      if (better(cand, best)) {
        best = cand;
        arg = static_cast<int>(i);
      }
    }
    dp[static_cast<std::size_t>(g - r0)] = *best;
    choice[static_cast<std::size_t>(g - r0)] = arg;
  }

  Strategy s;
  for (long long g = r0; g <= top;) {
    int c = choice[static_cast<std::size_t>(g - r0)];
    if (c < 0) break;
    s.purchases.push_back(static_cast<std::size_t>(c));
    g += xs[static_cast<std::size_t>(c)];
  }
  if (stats) {
    stats->states_visited = visited;
    stats->memo_size = static_cast<std::size_t>(size);
    stats->peak_bound_per_item = bounds_plus_one(purchase_caps(inst));
  }
  return make_solution(std::move(s), inst, Method::FixedDP, true);
}

RateRescaling integer_rate_rescaling(const Instance& inst) {
  mpz_class l = 1;
  auto absorb = [&](const Number& n) {
    mpq_class q = n.to_rational();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  };
  absorb(inst.r);
  for (const Item& it : inst.items) absorb(it.x);
  if (inst.goal.kind == GoalKind::Rate) absorb(inst.goal.value);

  Number f = Number::exact(l, 1);
  if (!inst.r.is_exact()) f = f.to_mode(NumericMode::Float);
  RateRescaling out{inst, f, Number::exact(0)};
  out.scaled.r = inst.r * f;
  for (Item& it : out.scaled.items) it.x = it.x * f;
  if (inst.goal.kind == GoalKind::Rate) out.scaled.goal.value = inst.goal.value * f;
  if (inst.goal.kind == GoalKind::Cookies)
    out.estimated_states = max(zero_like(f), purchase_rate_cap(out.scaled) - out.scaled.r + Number(1));
  else if (inst.goal.kind == GoalKind::Rate)
    out.estimated_states = out.scaled.goal.value - out.scaled.r;
  // Float inputs: snap to the integers the exact conversion promised.
  if (!inst.r.is_exact()) {
    out.scaled.r = Number(std::round(out.scaled.r.to_double()));
    for (Item& it : out.scaled.items) it.x = Number(std::round(it.x.to_double()));
  }
  return out;
}

// ---------------------------------------------------------------- tuple DP

namespace {

struct CountsHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : v) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class TupleDP {
 public:
  TupleDP(const Instance& inst, std::vector<std::size_t> caps)
      : inst_(inst), caps_(std::move(caps)), cookie_goal_(inst.goal.kind == GoalKind::Cookies) {
    if (cookie_goal_) rate_cap_ = purchase_rate_cap(inst);
    prices_.resize(inst.items.size());
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
      Number p = inst.items[i].y;
      for (std::size_t n = 0; n < caps_[i]; ++n) {
        prices_[i].push_back(p);
        if (!inst.items[i].fixed_cost()) p *= inst.items[i].alpha;
      }
    }
  }

  std::optional<Number> run(Strategy& out) {
    std::vector<std::uint32_t> counts(inst_.items.size(), 0);
    auto v = eval(counts, zero_like(inst_.z), inst_.r);
    // Walk the argmin choices.
    while (true) {
      const Entry& e = memo_.at(counts);
      if (e.choice < 0) break;
      auto i = static_cast<std::size_t>(e.choice);
      out.purchases.push_back(i);
      ++counts[i];
    }
    return v;
  }

  std::size_t visited() const { return visited_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    std::optional<Number> value;
    int choice = -1;
  };

  std::optional<Number> eval(std::vector<std::uint32_t>& counts, const Number& spent, const Number& rate) {
    if (auto it = memo_.find(counts); it != memo_.end()) return it->second.value;
    ++visited_;
    const Number& goal = inst_.goal.value;
    // Cookies on hand right after reaching this state: the t = 0 batch
    // leaves z - spent; any purchase that needed saving leaves zero.
    Number leftover = max(inst_.z - spent, zero_like(spent));

    Entry e;
    if (cookie_goal_) {
      if (leftover >= goal) {
        e.value = zero_like(goal);
        return memo_.emplace(counts, e).first->second.value;
      }
      if (!rate.is_zero()) e.value = (goal - leftover) / rate;
    } else if (compare_tol(rate, goal) >= 0) {
      e.value = zero_like(goal);
      return memo_.emplace(counts, e).first->second.value;
    }

    if (!cookie_goal_ || compare_tol(rate, rate_cap_) <= 0) {
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] >= caps_[i]) continue;
        const Number& price = prices_[i][counts[i]];
        Number need = max(price - leftover, zero_like(price));
        if (!need.is_zero() && rate.is_zero()) continue;
        Number step = need.is_zero() ? need : need / rate;
        ++counts[i];
        auto child = eval(counts, spent + price, rate + inst_.items[i].x);
        --counts[i];
        if (!child) continue;
        Number cand = step + *child;
        if (better(cand, e.value)) {
          e.value = cand;
          e.choice = static_cast<int>(i);
        }
      }
    }
    return memo_.emplace(counts, e).first->second.value;
  }

  const Instance& inst_;
  std::vector<std::size_t> caps_;
  bool cookie_goal_;
  Number rate_cap_;
  std::vector<std::vector<Number>> prices_;
  std::unordered_map<std::vector<std::uint32_t>, Entry, CountsHash> memo_;
  std::size_t visited_ = 0;
};

}  // namespace

Solution solve_tuple_dp(const Instance& inst, const SolveOptions& opts, DPStats* stats) {
  require_valid(inst);
  require_goal(inst, "tuple DP");
  std::vector<std::size_t> caps = purchase_caps(inst);
  std::vector<std::size_t> bounds = bounds_plus_one(caps);
  long double product = 1;
  for (auto b : bounds) product *= static_cast<long double>(b);
  if (product > static_cast<long double>(opts.state_cap))
    throw StateSpaceExceeded("tuple DP state space (product of N_i) exceeds the cap of " +
                             std::to_string(opts.state_cap));

  TupleDP dp(inst, caps);
  Strategy s;
  auto v = dp.run(s);
  if (!v) throw Unreachable("goal cannot be reached");
  if (stats) {
    stats->states_visited = dp.visited();
    stats->memo_size = dp.memo_size();
    stats->peak_bound_per_item = bounds;
  }
  return make_solution(std::move(s), inst, Method::TupleDP, true);
}

// ------------------------------------------------------ two-item structured

namespace {

// Time of 2^s (then waiting) from zero cookies at rate G.
Number item2_phase(const Number& G, const Item& i2, const Number& M, std::size_t s) {
  Number t = zero_like(M);
  Number rate = G;
  for (std::size_t j = 0; j < s; ++j) {
    t += i2.y / rate;
    rate += i2.x;
  }
  return t + M / rate;
}

std::size_t item2_limit(const Number& G, const Item& i2, const Number& cap) {
  if (cap < G) return 0;
  Number v = (cap - G) / i2.x;
  return static_cast<std::size_t>(v.floor().to_integer()) + 1;
}

// Integer golden-section search for a unimodal f on [lo, hi]; ties go left.
std::size_t golden_argmin(std::size_t lo, std::size_t hi, const std::function<Number(std::size_t)>& f) {
  constexpr double kInvPhi = 0.6180339887498949;
  while (hi - lo > 3) {
    auto span = static_cast<double>(hi - lo);
    std::size_t m1 = lo + static_cast<std::size_t>(span * (1 - kInvPhi));
    std::size_t m2 = lo + static_cast<std::size_t>(span * kInvPhi);
    if (m2 <= m1) m2 = m1 + 1;
    int c = compare_tol(f(m1), f(m2));
    if (c < 0)
      hi = m2 - 1;
    else if (c > 0)
      lo = m1 + 1;
    else
      hi = m2;
  }
  std::size_t arg = lo;
  Number best = f(lo);
  for (std::size_t s = lo + 1; s <= hi; ++s) {
    Number v = f(s);
    if (definitely_less(v, best)) {
      best = v;
      arg = s;
    }
  }
  return arg;
}

}  // namespace

Solution solve_two_item_structured(const Instance& inst, const SolveOptions& opts, std::size_t* mismatches) {
  require_valid(inst);
  if (inst.items.size() != 2) throw PreconditionError("two-item solver needs exactly two items");
  if (!all_fixed_cost(inst)) throw PreconditionError("two-item solver needs fixed costs");
  if (!inst.z.is_zero()) throw PreconditionError("two-item solver assumes z = 0");
  if (inst.goal.kind != GoalKind::Cookies) throw PreconditionError("two-item solver needs a Cookies goal");

  const Item& i1 = inst.items[0];
  const Item& i2 = inst.items[1];
  const Number& M = inst.goal.value;
  TwoItemThresholds th = two_item_thresholds(i1, i2, M);
  if (mismatches) *mismatches = 0;
  if (!th.m_sufficient) {
    bool integral = inst.r.is_integer() && i1.x.is_integer() && i2.x.is_integer();
    return integral ? solve_fixed_dp(inst) : solve_tuple_dp(inst, opts);
  }

  const Number cap = purchase_rate_cap(inst);
  const std::size_t u1 = purchase_caps(inst)[0];
  Number prefix = zero_like(M);
  Number G = inst.r;
  std::optional<Number> best;
  std::size_t best_r = 0, best_s = 0;
  for (std::size_t r = 0; r <= u1; ++r) {
    std::size_t smax = item2_limit(G, i2, cap);
    auto f = [&](std::size_t s) { return item2_phase(G, i2, M, s); };
    std::size_t s = golden_argmin(0, smax, f);
    Number t = prefix + f(s);
    if (opts.validate) {
      std::size_t s_ex = 0;
      Number v_ex = f(0);
      for (std::size_t c = 1; c <= smax; ++c) {
        Number v = f(c);
        if (definitely_less(v, v_ex)) {
          v_ex = v;
          s_ex = c;
        }
      }
      if (definitely_less(prefix + v_ex, t)) {
        if (mismatches) ++*mismatches;
        s = s_ex;
        t = prefix + v_ex;
      }
    }
    if (better(t, best)) {
      best = t;
      best_r = r;
      best_s = s;
    }
    prefix += i1.y / G;
    G += i1.x;
  }
  Strategy strat;
  strat.purchases.assign(best_r, 0);
  strat.purchases.insert(strat.purchases.end(), best_s, 1);
  return make_solution(std::move(strat), inst, Method::TwoItemStructured, true);
}

std::vector<SweepRow> prefix_sweep(const Instance& inst, std::size_t r_max) {
  require_valid(inst);
  if (inst.items.size() != 2 || !all_fixed_cost(inst))
    throw PreconditionError("sweep needs exactly two fixed-cost items");
  if (!inst.z.is_zero() || inst.goal.kind != GoalKind::Cookies)
    throw PreconditionError("sweep needs z = 0 and a Cookies goal");
  const Item& i1 = inst.items[0];
  const Item& i2 = inst.items[1];
  const Number& M = inst.goal.value;
  const Number cap = purchase_rate_cap(inst);

  std::vector<SweepRow> rows;
  Number prefix = zero_like(M);
  Number G = inst.r;
  for (std::size_t r = 0; r <= r_max; ++r) {
    std::size_t smax = item2_limit(G, i2, cap);
    Number acc = zero_like(M), rate = G;
    Number best = M / G;
    std::size_t arg = 0;
    for (std::size_t s = 1; s <= smax; ++s) {
      acc += i2.y / rate;
      rate += i2.x;
      Number v = acc + M / rate;
      if (definitely_less(v, best)) {
        best = v;
        arg = s;
      }
    }
    rows.push_back({r, prefix + best, G, arg});
    prefix += i1.y / G;
    G += i1.x;
  }
  return rows;
}

// ---------------------------------------------------------------- greedy

Solution solve_greedy(const Instance& inst, GreedyPolicy policy) {
  require_valid(inst);
  require_goal(inst, "greedy");
  const bool cookie_goal = inst.goal.kind == GoalKind::Cookies;
  const Number& goal = inst.goal.value;
  GameState s = initial_state(inst);
  Strategy strat;
  constexpr std::size_t kMaxPurchases = 10'000'000;

  while (strat.size() < kMaxPurchases) {
    if (cookie_goal && s.cookies >= goal) break;
    if (!cookie_goal && compare_tol(s.rate, goal) >= 0) break;
    std::optional<std::size_t> pick;
    Number pick_key;
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
      const Item& it = inst.items[i];
      Number price = current_cost(it, s.counts[i]);
      if (cookie_goal && !should_buy(s.rate, price, it.x, goal)) continue;
      // Lower key is better. With G = 0 the efficiency score degenerates to
      // its limit ordering, which is by price.
      Number key;
      if (policy == GreedyPolicy::RatioXY)
        key = -(it.x / price);
      else
        key = s.rate.is_zero() ? price : efficiency_score(price, it.x, s.rate);
      if (!pick || definitely_less(key, pick_key)) {
        pick = i;
        pick_key = key;
      }
    }
    if (!pick) break;
    auto next = advance(s, *pick, inst);
    if (!next) break;
    s = std::move(*next);
    strat.purchases.push_back(*pick);
  }
  Method m = policy == GreedyPolicy::RatioXY ? Method::GreedyRatio : Method::GreedyEfficiency;
  return make_solution(std::move(strat), inst, m, false);
}

// ---------------------------------------------------------------- local search

namespace {

class LocalSearch {
 public:
  LocalSearch(const Instance& inst, const SolveOptions& opts) : inst_(inst), opts_(opts), rng_(opts.seed) {}

  Strategy run(Strategy start) {
    cur_ = std::move(start);
    cur_time_ = cost(cur_);
    trim(cur_);
    std::size_t stall = 0;
    bool sorted_on_plateau = false;
    for (std::size_t it = 0; it < opts_.iterations; ++it) {
      if (stall >= opts_.stall_limit) {
        if (!scan_neighbourhood()) break;  // local optimum
        stall = 0;
        sorted_on_plateau = false;
        continue;
      }
      auto cand = random_move(sorted_on_plateau);
      if (!cand) {
        ++stall;
        continue;
      }
      auto t = cost(*cand);
      if (better(t, cur_time_)) {
        accept(std::move(*cand), t);
        stall = 0;
        sorted_on_plateau = false;
      } else {
        ++stall;
      }
    }
    return cur_;
  }

 private:
  std::optional<Number> cost(const Strategy& s) const { return simulate(s, inst_).total_time; }

  // Drop purchases the engine never executes (goal met first).
  void trim(Strategy& s) const {
    SimReport rep = simulate(s, inst_);
    s.purchases.resize(rep.purchases.size());
  }

  void accept(Strategy s, std::optional<Number> t) {
    trim(s);
    cur_ = std::move(s);
    cur_time_ = std::move(t);
  }

  Strategy sorted_by_cost(const Strategy& s) const {
    Strategy out = s;
    std::stable_sort(out.purchases.begin(), out.purchases.end(),
                     [&](std::size_t a, std::size_t b) { return inst_.items[a].y < inst_.items[b].y; });
    return out;
  }

  std::optional<Strategy> random_move(bool& sorted_on_plateau) {
    const std::size_t n = cur_.size();
    const std::size_t k = inst_.items.size();
    Strategy s = cur_;
    auto& p = s.purchases;
    switch (rng_.below(5)) {
      case 0:  // add
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(rng_.below(n + 1)), rng_.below(k));
        return s;
      case 1:  // delete
        if (n == 0) return std::nullopt;
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(rng_.below(n)));
        return s;
      case 2: {  // replace
        if (n == 0 || k < 2) return std::nullopt;
        std::size_t pos = rng_.below(n);
        std::size_t item = rng_.below(k - 1);
        p[pos] = item >= p[pos] ? item + 1 : item;
        return s;
      }
      case 3: {  // move
        if (n < 2) return std::nullopt;
        std::size_t from = rng_.below(n);
        std::size_t to = rng_.below(n - 1);
        if (to >= from) ++to;
        std::size_t v = p[from];
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(from));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(to), v);
        return s;
      }
      default:  // sort by base cost, once per plateau
        if (sorted_on_plateau) return std::nullopt;
        sorted_on_plateau = true;
        return sorted_by_cost(cur_);
    }
  }

  // Takes the best strictly improving neighbour under all five moves. Moves
  // inside a run of equal items give the same sequence, so each distinct
  // neighbour is generated once: inserts and deletes act on the end of a run.
  bool scan_neighbourhood() {
    const auto& p = cur_.purchases;
    const std::size_t n = p.size();
    const std::size_t k = inst_.items.size();
    std::optional<Strategy> best;
    std::optional<Number> best_t = cur_time_;
    auto consider = [&](Strategy s) {
      auto t = cost(s);
      if (better(t, best_t)) {
        best_t = t;
        best = std::move(s);
      }
    };
    for (std::size_t pos = 0; pos <= n; ++pos)
      for (std::size_t item = 0; item < k; ++item) {
        if (pos < n && p[pos] == item) continue;
        Strategy s = cur_;
        s.purchases.insert(s.purchases.begin() + static_cast<std::ptrdiff_t>(pos), item);
        consider(std::move(s));
      }
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (pos + 1 < n && p[pos + 1] == p[pos]) continue;
      Strategy s = cur_;
      s.purchases.erase(s.purchases.begin() + static_cast<std::ptrdiff_t>(pos));
      consider(std::move(s));
    }
    for (std::size_t pos = 0; pos < n; ++pos)
      for (std::size_t item = 0; item < k; ++item) {
        if (item == p[pos]) continue;
        Strategy s = cur_;
        s.purchases[pos] = item;
        consider(std::move(s));
      }
    for (std::size_t from = 0; from < n; ++from) {
      if (from + 1 < n && p[from + 1] == p[from]) continue;
      const std::size_t v = p[from];
      std::vector<std::size_t> rest = p;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(from));
      for (std::size_t to = 0; to < n; ++to) {
        if (to == from || (to < rest.size() && rest[to] == v)) continue;
        Strategy s{rest};
        s.purchases.insert(s.purchases.begin() + static_cast<std::ptrdiff_t>(to), v);
        consider(std::move(s));
      }
    }
    consider(sorted_by_cost(cur_));
    if (!best) return false;
    accept(std::move(*best), best_t);
    return true;
  }

  const Instance& inst_;
  const SolveOptions& opts_;
  Rng rng_;
  Strategy cur_;
  std::optional<Number> cur_time_;
};

}  // namespace

Solution solve_local_search(const Instance& inst, const SolveOptions& opts) {
  require_valid(inst);
  require_goal(inst, "local search");
  Strategy start;
  if (opts.start == LocalSearchStart::Greedy) {
    start = solve_greedy(inst, GreedyPolicy::EfficiencyScore).strategy;
  } else {
    Rng rng(opts.seed ^ 0x5eed5eed5eed5eedULL);
    std::size_t len = rng.below(4 * inst.items.size() + 1);
    for (std::size_t j = 0; j < len; ++j) start.purchases.push_back(rng.below(inst.items.size()));
  }
  Strategy s = LocalSearch(inst, opts).run(std::move(start));
  return make_solution(std::move(s), inst, Method::LocalSearch, false);
}

Solution solve_closed_form(const Instance& inst) {
  require_valid(inst);
  OneItemSolution one = solve_one_item(inst);
  Strategy s;
  s.purchases.assign(one.k_star, 0);
  return make_solution(std::move(s), inst, Method::ClosedForm, true);
}

Solution solve(const Instance& inst, Method method, const SolveOptions& opts, DPStats* stats) {
  switch (method) {
    case Method::FixedDP: return solve_fixed_dp(inst, stats);
    case Method::TupleDP: return solve_tuple_dp(inst, opts, stats);
    case Method::TwoItemStructured: return solve_two_item_structured(inst, opts);
    case Method::GreedyRatio: return solve_greedy(inst, GreedyPolicy::RatioXY);
    case Method::GreedyEfficiency: return solve_greedy(inst, GreedyPolicy::EfficiencyScore);
    case Method::LocalSearch: return solve_local_search(inst, opts);
    case Method::ClosedForm: return solve_closed_form(inst);
    case Method::Oracle: {
      require_valid(inst);
      OracleOptions o;
      o.budget = opts.oracle_budget;
      OracleResult res = brute_force_continuous(inst, std::nullopt, o);
      if (!res.best_time) throw Unreachable("goal cannot be reached");
      return make_solution(res.best_strategy, inst, Method::Oracle, true);
    }
  }
  throw PreconditionError("unknown method");
}

// ---------------------------------------------------------------- time budget

BudgetResult solve_time_budget(const Instance& inst, Method inner, const SolveOptions& opts) {
  require_valid(inst);
  if (inst.goal.kind != GoalKind::TimeBudget) throw PreconditionError("time-budget search needs a TimeBudget goal");
  const Number& T = inst.goal.value;
  const bool want_rate = inst.goal.maximize == BudgetTarget::Rate;

  auto attempt = [&](const Number& v) -> std::optional<Solution> {
    Instance sub = inst;
    sub.goal = want_rate ? Goal::rate(v) : Goal::cookies(v);
    try {
      Solution sol = solve(sub, inner, opts);
      if (less_or_equal_tol(sol.total_time, T)) return sol;
    } catch (const Unreachable&) {
    }
    return std::nullopt;
  };

  Number lo;
  std::optional<Solution> lo_sol;
  if (want_rate) {
    lo = inst.r;
    lo_sol = Solution{Strategy{}, T, inner, false};
  } else {
    lo = inst.z + inst.r * T;
    lo_sol = attempt(lo);
    if (!lo_sol) throw SolverError("pure waiting does not meet its own cookie count");
  }
  Number step = inst.items.front().x;
  for (const Item& it : inst.items) step = max(step, it.x);
  Number hi = want_rate ? inst.r + step : lo * Number(2);
  for (int d = 0; d < 256; ++d) {
    auto sol = attempt(hi);
    if (!sol) break;
    lo = hi;
    lo_sol = std::move(sol);
    hi = hi * Number(2);
  }
  Number two = Number::exact(2);
  for (int it = 0; it < 64; ++it) {
    if (compare_tol(lo, hi) == 0) break;
    Number mid = (lo + hi) / two;
    if (auto sol = attempt(mid)) {
      lo = mid;
      lo_sol = std::move(sol);
    } else {
      hi = mid;
    }
  }

  SimReport rep = simulate(lo_sol->strategy, inst);
  Solution sol = *lo_sol;
  sol.total_time = T;
  return BudgetResult{*rep.budget_value, lo, std::move(sol)};
}

}  // namespace cookie
