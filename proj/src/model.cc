#include "cookie/model.h"

#include <sstream>

namespace cookie {

std::string to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::NoItems: return "NoItems";
    case ViolationCode::NegativeInitialCookies: return "NegativeInitialCookies";
    case ViolationCode::NonPositiveInitialRate: return "NonPositiveInitialRate";
    case ViolationCode::NonPositiveRateGain: return "NonPositiveRateGain";
    case ViolationCode::NonPositiveCost: return "NonPositiveCost";
    case ViolationCode::AlphaBelowOne: return "AlphaBelowOne";
    case ViolationCode::NonPositiveGoal: return "NonPositiveGoal";
    case ViolationCode::RateGoalNotAboveInitial: return "RateGoalNotAboveInitial";
  }
  return "Unknown";
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  auto add = [&](ViolationCode c, std::optional<std::size_t> item, std::string msg) {
    out.push_back({c, item, std::move(msg)});
  };
  if (inst.items.empty()) add(ViolationCode::NoItems, std::nullopt, "instance has no items");
  if (inst.z.sign() < 0)
    add(ViolationCode::NegativeInitialCookies, std::nullopt, "initial cookies must be >= 0");
  if (inst.r.sign() < 0 || (inst.r.is_zero() && inst.z.is_zero()))
    add(ViolationCode::NonPositiveInitialRate, std::nullopt,
        "initial rate must be > 0 (or 0 with positive initial cookies)");
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    const Item& it = inst.items[i];
    if (it.x.sign() <= 0)
      add(ViolationCode::NonPositiveRateGain, i, "item " + std::to_string(i) + ": x must be > 0");
    if (it.y.sign() <= 0)
      add(ViolationCode::NonPositiveCost, i, "item " + std::to_string(i) + ": y must be > 0");
    if (it.alpha < Number(1))
      add(ViolationCode::AlphaBelowOne, i, "item " + std::to_string(i) + ": alpha must be >= 1");
  }
  if (inst.goal.value.sign() <= 0)
    add(ViolationCode::NonPositiveGoal, std::nullopt, "goal value must be > 0");
  else if (inst.goal.kind == GoalKind::Rate && inst.goal.value <= inst.r)
    add(ViolationCode::RateGoalNotAboveInitial, std::nullopt,
        "rate goal must exceed the initial rate");
  return out;
}

void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const auto& v : violations) msg << " [" << to_string(v.code) << "] " << v.message << ';';
  throw InvalidInstance(msg.str());
}

Number current_cost(const Item& item, std::size_t n) {
  if (n == 0 || item.fixed_cost()) return item.y;
  return item.y * pow_int(item.alpha, n);
}

Number rate_for_counts(const Instance& inst, std::span<const std::size_t> counts) {
  Number rate = inst.r;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != 0) rate += inst.items[i].x * Number::exact(static_cast<long long>(counts[i]));
  return rate;
}

GameState initial_state(const Instance& inst) {
  Number zero = Number::exact(0).to_mode(inst.z.mode());
  return GameState{std::vector<std::size_t>(inst.items.size(), 0), inst.z, inst.r, zero};
}

NumericMode instance_mode(const Instance& inst) {
  auto exact = [](const Number& n) { return n.is_exact(); };
  bool all = exact(inst.z) && exact(inst.r) && exact(inst.goal.value);
  for (const auto& it : inst.items) all = all && exact(it.x) && exact(it.y) && exact(it.alpha);
  return all ? NumericMode::Exact : NumericMode::Float;
}

Instance to_mode(const Instance& inst, NumericMode mode) {
  Instance out = inst;
  out.z = inst.z.to_mode(mode);
  out.r = inst.r.to_mode(mode);
  out.goal.value = inst.goal.value.to_mode(mode);
  for (auto& it : out.items) {
    it.x = it.x.to_mode(mode);
    it.y = it.y.to_mode(mode);
    it.alpha = it.alpha.to_mode(mode);
  }
  return out;
}

bool all_fixed_cost(const Instance& inst) {
  for (const auto& it : inst.items)
    if (!it.fixed_cost()) return false;
  return true;
}

std::string format_one_based(const Strategy& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.purchases.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.purchases[i] + 1);
  }
  return out + "]";
}

}  // namespace cookie
