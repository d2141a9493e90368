#include "cookie/oracle.h"

#include <climits>
#include <map>
#include <utility>

#include "cookie/analytic.h"

namespace cookie {

namespace {

Number zero_like(const Number& n) { return Number::exact(0).to_mode(n.mode()); }

// Exact inputs compare exactly; anything else goes through the tolerance.
int cmp(const Number& a, const Number& b) {
  return a.is_exact() && b.is_exact() ? compare(a, b) : compare_tol(a, b);
}

class ContinuousSearch {
 public:
  ContinuousSearch(const Instance& inst, std::vector<std::size_t> caps, const OracleOptions& opts)
      : inst_(inst), caps_(std::move(caps)), opts_(opts), cookie_goal_(inst.goal.kind == GoalKind::Cookies) {}

  OracleResult run() {
    Node root;
    root.counts.assign(inst_.items.size(), 0);
    for (const Item& it : inst_.items) root.prices.push_back(it.y);
    root.cookies = inst_.z;
    root.rate = inst_.r;
    root.clock = zero_like(inst_.z);
    if (opts_.dominance_pruning) seen_[root.counts].push_back({root.clock, root.cookies});
    dfs(root);
    return std::move(result_);
  }

 private:
  struct Node {
    std::vector<std::size_t> counts;
    std::vector<Number> prices;  // price of the next copy of each item
    Number cookies, rate, clock;
  };

  void record(const Number& t) {
    if (!result_.best_time || cmp(t, *result_.best_time) < 0) {
      result_.best_time = t;
      result_.best_strategy.purchases = path_;
      result_.optimal_count = 1;
    } else if (cmp(t, *result_.best_time) == 0) {
      ++result_.optimal_count;
    }
    if (opts_.stop_at && cmp(t, *opts_.stop_at) <= 0) stop_ = true;
  }

  bool dominated(const Node& n) {
    auto& list = seen_[n.counts];
    for (const auto& [clock, cookies] : list)
      if (cmp(clock, n.clock) <= 0 && cmp(cookies, n.cookies) >= 0) return true;
    list.push_back({n.clock, n.cookies});
    return false;
  }

  void dfs(const Node& n) {
    if (++result_.sequences_explored > opts_.budget)
      throw BudgetExceeded("oracle visited more than " + std::to_string(opts_.budget) + " sequences");
    const Number& goal = inst_.goal.value;

    if (cookie_goal_) {
      if (cmp(n.cookies, goal) >= 0) {
        record(n.clock);
        return;
      }
      if (!n.rate.is_zero()) record(n.clock + (goal - n.cookies) / n.rate);
    } else if (cmp(n.rate, goal) >= 0) {
      record(n.clock);
      return;
    }
    if (stop_) return;

    for (std::size_t i = 0; i < inst_.items.size() && !stop_; ++i) {
      if (n.counts[i] >= caps_[i]) continue;
      const Item& it = inst_.items[i];
      const Number& price = n.prices[i];
      Node c = n;
      if (cmp(n.cookies, price) >= 0) {
        c.cookies = n.cookies - price;
      } else {
        if (n.rate.is_zero()) continue;
        // Saving for this copy would pass M first: the sequence ends at its
        // parent, which was already counted.
        if (cookie_goal_ && cmp(goal, price) <= 0) continue;
        c.clock = n.clock + (price - n.cookies) / n.rate;
        c.cookies = zero_like(price);
      }
      if (opts_.cutoff && cmp(c.clock, *opts_.cutoff) > 0) continue;
      c.rate = n.rate + it.x;
      ++c.counts[i];
      if (it.alpha != Number(1)) c.prices[i] = price * it.alpha;
      if (opts_.dominance_pruning && dominated(c)) continue;
      path_.push_back(i);
      dfs(c);
      path_.pop_back();
    }
  }

  const Instance& inst_;
  std::vector<std::size_t> caps_;
  const OracleOptions& opts_;
  bool cookie_goal_;
  bool stop_ = false;
  std::vector<std::size_t> path_;
  OracleResult result_;
  std::map<std::vector<std::size_t>, std::vector<std::pair<Number, Number>>> seen_;
};

}  // namespace

OracleResult brute_force_continuous(const Instance& inst, std::optional<std::vector<std::size_t>> per_item_caps,
                                    const OracleOptions& opts) {
  require_valid(inst);
  if (inst.goal.kind == GoalKind::TimeBudget) throw PreconditionError("oracle needs a Cookies or Rate goal");
  std::vector<std::size_t> caps = per_item_caps ? *per_item_caps : purchase_caps(inst);
  if (caps.size() != inst.items.size()) throw InputError("one cap per item required");
  return ContinuousSearch(inst, std::move(caps), opts).run();
}

bool oracle_decides_within(const Instance& inst, const Number& threshold,
                           std::optional<std::vector<std::size_t>> per_item_caps, std::size_t budget) {
  OracleOptions o;
  o.budget = budget;
  o.cutoff = threshold;
  o.stop_at = threshold;
  o.dominance_pruning = true;
  OracleResult r = brute_force_continuous(inst, std::move(per_item_caps), o);
  return r.best_time && cmp(*r.best_time, threshold) <= 0;
}

// ---------------------------------------------------------------- discrete

namespace {

constexpr std::int64_t kSaturate = LLONG_MAX / 4;

std::int64_t as_int(const Number& n, const char* what) {
  if (!n.is_integer()) throw InvalidInstance(std::string(what) + " must be an integer");
  mpq_class q = n.to_rational();
  if (!q.get_num().fits_slong_p()) throw InvalidInstance(std::string(what) + " is too large");
  return q.get_num().get_si();
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  __int128 v = static_cast<__int128>(a) * b;
  return v > kSaturate ? kSaturate : static_cast<std::int64_t>(v);
}

class DiscreteSearch {
 public:
  DiscreteSearch(const DiscreteInstance& d, std::size_t budget) : budget_(budget) {
    r_ = as_int(d.r, "income");
    M_ = as_int(d.M, "goal");
    T_ = d.T;
    for (const Item& it : d.items) {
      x_.push_back(as_int(it.x, "item x"));
      y_.push_back(as_int(it.y, "item y"));
      a_.push_back(as_int(it.alpha, "item alpha"));
    }
  }

  DiscreteDecision run() {
    std::vector<std::uint32_t> counts(x_.size(), 0);
    path_.assign(static_cast<std::size_t>(T_), {});
    DiscreteDecision out;
    out.yes = dfs(0, 0, r_, counts);
    out.states_explored = explored_;
    if (out.yes) out.witness.steps = path_;
    return out;
  }

 private:
  std::int64_t price(std::size_t i, std::uint32_t n) const {
    std::int64_t p = y_[i];
    for (std::uint32_t j = 0; j < n && p < kSaturate; ++j) p = sat_mul(p, a_[i]);
    return p;
  }

  // Cookies reachable at T from here if every copy bought in the next step
  // or later earned its full remaining income for free beyond its price.
  bool hopeless(std::int64_t cookies, std::int64_t income, const std::vector<std::uint32_t>& counts,
                std::int64_t rem) const {
    __int128 ub = static_cast<__int128>(cookies) + static_cast<__int128>(income) * rem;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      __int128 gain = static_cast<__int128>(x_[i]) * (rem - 1);
      std::uint32_t n = counts[i];
      while (true) {
        std::int64_t p = price(i, n);
        if (gain <= p) break;
        if (a_[i] == 1) return false;  // unbounded profitable copies
        ub += gain - p;
        ++n;
      }
    }
    return ub < M_;
  }

  bool dfs(std::int64_t t, std::int64_t cookies, std::int64_t income, std::vector<std::uint32_t>& counts) {
    if (++explored_ > budget_)
      throw BudgetExceeded("discrete search visited more than " + std::to_string(budget_) + " states");
    if (t == T_) return cookies >= M_;
    const std::int64_t rem = T_ - t;
    if (static_cast<__int128>(cookies) + static_cast<__int128>(income) * rem >= M_) {
      for (std::int64_t s = t; s < T_; ++s) path_[static_cast<std::size_t>(s)].clear();
      return true;
    }
    if (hopeless(cookies, income, counts, rem)) return false;

    std::vector<std::uint32_t> key(counts.begin(), counts.end());
    key.push_back(static_cast<std::uint32_t>(t));
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= cookies) return false;

    const std::int64_t cash = cookies + income;
    std::vector<std::size_t> bought;
    bool ok = choose(0, t, cash, income, counts, bought);
    if (!ok) {
      auto& f = failed_[key];
      f = std::max(f, cookies);
    }
    return ok;
  }

  // Enumerates the multiset bought this step, item by item; only copies that
  // can pay for themselves before T are considered.
  bool choose(std::size_t i, std::int64_t t, std::int64_t cash, std::int64_t income,
              std::vector<std::uint32_t>& counts, std::vector<std::size_t>& bought) {
    if (i == x_.size()) {
      path_[static_cast<std::size_t>(t)] = bought;
      return dfs(t + 1, cash, income, counts);
    }
    const std::int64_t rem_after = T_ - t - 1;
    std::uint32_t added = 0;
    bool ok = choose(i + 1, t, cash, income, counts, bought);
    while (!ok) {
      std::int64_t p = price(i, counts[i]);
      if (p > cash || static_cast<__int128>(x_[i]) * rem_after <= p) break;
      cash -= p;
      income += x_[i];
      ++counts[i];
      ++added;
      bought.push_back(i);
      ok = choose(i + 1, t, cash, income, counts, bought);
    }
    counts[i] -= added;
    bought.resize(bought.size() - added);
    return ok;
  }

  std::size_t budget_;
  std::size_t explored_ = 0;
  std::int64_t r_ = 0, M_ = 0, T_ = 0;
  std::vector<std::int64_t> x_, y_, a_;
  std::vector<std::vector<std::size_t>> path_;
  std::map<std::vector<std::uint32_t>, std::int64_t> failed_;
};

}  // namespace

DiscreteDecision brute_force_discrete(const DiscreteInstance& d, std::size_t budget) {
  require_valid(d);
  return DiscreteSearch(d, budget).run();
}

}  // namespace cookie
