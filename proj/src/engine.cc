#include "cookie/engine.h"

namespace cookie {

namespace {

void check_indices(const Strategy& seq, const Instance& inst) {
  for (std::size_t idx : seq.purchases)
    if (idx >= inst.items.size())
      throw InputError("strategy index " + std::to_string(idx) + " out of range");
}

Number zero_like(const Number& n) { return Number::exact(0).to_mode(n.mode()); }

}  // namespace

std::optional<GameState> advance(const GameState& state, std::size_t item, const Instance& inst) {
  const Item& it = inst.items.at(item);
  Number price = current_cost(it, state.counts[item]);
  GameState next = state;
  if (compare_tol(state.cookies, price) >= 0) {
    next.cookies = max(state.cookies - price, zero_like(price));
  } else {
    if (state.rate.is_zero()) return std::nullopt;
    next.clock += (price - state.cookies) / state.rate;
    next.cookies = zero_like(price);
  }
  next.rate += it.x;
  ++next.counts[item];
  return next;
}

Number buy_time_from(const Strategy& seq, const Instance& inst, const GameState& start) {
  check_indices(seq, inst);
  GameState s = start;
  for (std::size_t idx : seq.purchases) {
    auto next = advance(s, idx, inst);
    if (!next) throw SolverError("purchase can never be afforded at zero rate");
    s = std::move(*next);
  }
  return s.clock - start.clock;
}

Number buy_time(const Strategy& seq, const Instance& inst) {
  return buy_time_from(seq, inst, initial_state(inst));
}

Number buy_time_at_rate(const Strategy& seq, const Number& G, const Instance& inst) {
  GameState s{std::vector<std::size_t>(inst.items.size(), 0), zero_like(G), G, zero_like(G)};
  return buy_time_from(seq, inst, s);
}

SimReport simulate_with_delays(const Strategy& seq, const Instance& inst,
                               std::span<const Number> delays) {
  check_indices(seq, inst);
  const Goal& goal = inst.goal;
  const bool cookie_goal = goal.kind == GoalKind::Cookies;
  const bool rate_goal = goal.kind == GoalKind::Rate;
  const bool budget_goal = goal.kind == GoalKind::TimeBudget;

  SimReport rep;
  GameState s = initial_state(inst);
  rep.buying_phase_end = s.clock;
  bool done = false;

  auto finish = [&](std::optional<Number> t) {
    rep.total_time = std::move(t);
    done = true;
  };
  // Time at which cookies reach M while saving from the current state,
  // provided M is reached no later than `target` cookies.
  auto crossing_before = [&](const Number& target) -> std::optional<Number> {
    if (!cookie_goal || goal.value > target) return std::nullopt;
    return s.clock + (goal.value - s.cookies) / s.rate;
  };

  if (cookie_goal && s.cookies >= goal.value) finish(s.clock);
  if (rate_goal && compare_tol(s.rate, goal.value) >= 0) finish(s.clock);

  for (std::size_t j = 0; j < seq.purchases.size() && !done; ++j) {
    const std::size_t idx = seq.purchases[j];
    const Item& it = inst.items[idx];
    Number price = current_cost(it, s.counts[idx]);

    if (compare_tol(s.cookies, price) < 0) {
      if (s.rate.is_zero()) {
        finish(std::nullopt);
        break;
      }
      if (auto t = crossing_before(price)) {
        finish(*t);
        break;
      }
      Number arrive = s.clock + (price - s.cookies) / s.rate;
      if (budget_goal && arrive > goal.value) break;
      s.clock = arrive;
      s.cookies = price;
    }
    if (j < delays.size() && delays[j].sign() > 0) {
      Number after = s.cookies + s.rate * delays[j];
      if (auto t = crossing_before(after)) {
        finish(*t);
        break;
      }
      if (budget_goal && s.clock + delays[j] > goal.value) break;
      s.clock += delays[j];
      s.cookies = after;
    }
    s.cookies = max(s.cookies - price, zero_like(price));
    s.rate += it.x;
    ++s.counts[idx];
    rep.purchases.push_back({s.clock, idx, price, s.rate, s.cookies});
    rep.buying_phase_end = s.clock;
    if (rate_goal && compare_tol(s.rate, goal.value) >= 0) finish(s.clock);
  }
  rep.truncated = rep.purchases.size() < seq.purchases.size();
  rep.final_rate = s.rate;

  if (!done) {
    switch (goal.kind) {
      case GoalKind::Cookies:
        if (s.cookies >= goal.value)
          rep.total_time = s.clock;
        else if (s.rate.is_zero())
          rep.total_time = std::nullopt;
        else
          rep.total_time = s.clock + (goal.value - s.cookies) / s.rate;
        break;
      case GoalKind::Rate:
        rep.total_time = std::nullopt;
        break;
      case GoalKind::TimeBudget:
        rep.total_time = goal.value;
        rep.budget_value = goal.maximize == BudgetTarget::Rate
                               ? s.rate
                               : s.cookies + s.rate * (goal.value - s.clock);
        break;
    }
  }
  return rep;
}

SimReport simulate(const Strategy& seq, const Instance& inst) {
  return simulate_with_delays(seq, inst, {});
}

PriceBounds lemma2_bounds(const Strategy& seq, const Number& G, const Instance& inst) {
  check_indices(seq, inst);
  if (seq.empty()) throw PreconditionError("price bounds need a non-empty sequence");
  std::vector<std::size_t> counts(inst.items.size(), 0);
  Number prices = zero_like(G);
  Number gains = zero_like(G);
  for (std::size_t idx : seq.purchases) {
    prices += current_cost(inst.items[idx], counts[idx]++);
    gains += inst.items[idx].x;
  }
  return {prices / (G + gains), prices / G};
}

}  // namespace cookie
