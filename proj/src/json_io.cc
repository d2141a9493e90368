#include "cookie/json_io.h"

#include <fstream>

#include "cookie/analytic.h"
#include <sstream>

namespace cookie {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json items_to_json(const std::vector<Item>& items) {
  Json arr = Json::array();
  for (const Item& it : items) arr.push_back({{"x", to_json(it.x)}, {"y", to_json(it.y)}, {"alpha", to_json(it.alpha)}});
  return arr;
}

std::vector<Item> items_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("\"items\" must be an array");
  std::vector<Item> out;
  for (const Json& e : j) {
    Item it;
    it.x = number_from_json(field(e, "x"), "x");
    it.y = number_from_json(field(e, "y"), "y");
    it.alpha = e.contains("alpha") ? number_from_json(e.at("alpha"), "alpha") : Number::exact(1);
    out.push_back(std::move(it));
  }
  return out;
}

std::vector<std::int64_t> ints_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("\"") + what + "\" must be an array of integers");
  std::vector<std::int64_t> out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw InputError(std::string("\"") + what + "\" must hold integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Json to_json(const Number& n) {
  if (n.is_exact()) return n.str();
  return n.to_double();
}

Number number_from_json(const Json& j, const char* name) {
  try {
    if (j.is_number_integer()) return Number(static_cast<double>(j.get<std::int64_t>()));
    if (j.is_number()) return Number(j.get<double>());
    if (j.is_string()) return Number::parse(j.get<std::string>());
  } catch (const NumericError& e) {
    throw InputError(std::string("field \"") + name + "\": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field \"") + name + "\": " + e.what());
  }
  throw InputError(std::string("field \"") + name + "\" must be a number or a \"p/q\" string");
}

Json to_json(const Instance& inst) {
  Json goal;
  switch (inst.goal.kind) {
    case GoalKind::Cookies: goal = {{"type", "cookies"}, {"value", to_json(inst.goal.value)}}; break;
    case GoalKind::Rate: goal = {{"type", "rate"}, {"value", to_json(inst.goal.value)}}; break;
    case GoalKind::TimeBudget:
      goal = {{"type", "time_budget"},
              {"value", to_json(inst.goal.value)},
              {"maximize", inst.goal.maximize == BudgetTarget::Rate ? "rate" : "cookies"}};
      break;
  }
  return Json{{"initial_cookies", to_json(inst.z)},
              {"initial_rate", to_json(inst.r)},
              {"items", items_to_json(inst.items)},
              {"goal", goal}};
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  Instance inst;
  inst.z = j.contains("initial_cookies") ? number_from_json(j.at("initial_cookies"), "initial_cookies")
                                         : Number::exact(0);
  inst.r = j.contains("initial_rate") ? number_from_json(j.at("initial_rate"), "initial_rate") : Number::exact(1);
  inst.items = items_from_json(field(j, "items"));
  const Json& g = field(j, "goal");
  const Json& type = field(g, "type");
  if (!type.is_string()) throw InputError("goal type must be a string");
  Number value = number_from_json(field(g, "value"), "value");
  const std::string t = type.get<std::string>();
  if (t == "cookies") {
    inst.goal = Goal::cookies(value);
  } else if (t == "rate") {
    inst.goal = Goal::rate(value);
  } else if (t == "time_budget") {
    std::string what = g.contains("maximize") ? g.at("maximize").get<std::string>() : "cookies";
    if (what != "cookies" && what != "rate") throw InputError("maximize must be \"cookies\" or \"rate\"");
    inst.goal = Goal::time_budget(value, what == "rate" ? BudgetTarget::Rate : BudgetTarget::Cookies);
  } else {
    throw InputError("unknown goal type \"" + t + "\"");
  }
  return inst;
}

Json to_json(const Strategy& s) { return Json{{"purchases", s.purchases}}; }

Strategy strategy_from_json(const Json& j) {
  const Json& p = field(j, "purchases");
  if (!p.is_array()) throw InputError("\"purchases\" must be an array");
  Strategy s;
  for (const Json& e : p) {
    if (!e.is_number_unsigned()) throw InputError("purchases must be non-negative integers");
    s.purchases.push_back(e.get<std::size_t>());
  }
  return s;
}

Json to_json(const SimReport& rep) {
  Json events = Json::array();
  for (const auto& e : rep.purchases)
    events.push_back({{"time", to_json(e.time)},
                      {"item", e.item},
                      {"price", to_json(e.price)},
                      {"rate_after", to_json(e.rate_after)},
                      {"cookies_after", to_json(e.cookies_after)}});
  Json out{{"purchases", events},
           {"buying_phase_end", to_json(rep.buying_phase_end)},
           {"total_time", rep.total_time ? to_json(*rep.total_time) : Json(nullptr)},
           {"reachable", rep.reachable()},
           {"final_rate", to_json(rep.final_rate)},
           {"truncated", rep.truncated}};
  if (rep.budget_value) out["budget_value"] = to_json(*rep.budget_value);
  return out;
}

Json to_json(const Solution& sol) {
  return Json{{"method", method_name(sol.method)},
              {"optimal", sol.optimal},
              {"total_time", to_json(sol.total_time)},
              {"strategy", to_json(sol.strategy)},
              {"labels", format_one_based(sol.strategy)}};
}

Json to_json(const DPStats& st) {
  return Json{{"states_visited", st.states_visited},
              {"memo_size", st.memo_size},
              {"peak_bound_per_item", st.peak_bound_per_item}};
}

Json to_json(const DiscreteInstance& d) {
  return Json{{"initial_cookies", "0"},
              {"initial_rate", to_json(d.r)},
              {"items", items_to_json(d.items)},
              {"goal", {{"type", "cookies"}, {"value", to_json(d.M)}}},
              {"deadline", d.T},
              {"cookie_scale", to_json(d.cookie_scale)}};
}

DiscreteInstance discrete_instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("discrete instance must be a JSON object");
  DiscreteInstance d;
  if (j.contains("initial_cookies") && !number_from_json(j.at("initial_cookies"), "initial_cookies").is_zero())
    throw InputError("discrete instances start with zero cookies");
  d.r = number_from_json(field(j, "initial_rate"), "initial_rate").to_mode(NumericMode::Exact);
  d.items = items_from_json(field(j, "items"));
  for (Item& it : d.items) {
    it.x = it.x.to_mode(NumericMode::Exact);
    it.y = it.y.to_mode(NumericMode::Exact);
    it.alpha = it.alpha.to_mode(NumericMode::Exact);
  }
  const Json& g = field(j, "goal");
  if (!g.contains("type") || g.at("type") != "cookies") throw InputError("discrete goal must be of type cookies");
  d.M = number_from_json(field(g, "value"), "value").to_mode(NumericMode::Exact);
  const Json& t = field(j, "deadline");
  if (!t.is_number_integer()) throw InputError("\"deadline\" must be an integer");
  d.T = t.get<std::int64_t>();
  if (j.contains("cookie_scale")) d.cookie_scale = number_from_json(j.at("cookie_scale"), "cookie_scale");
  return d;
}

Json to_json(const Schedule& s) { return Json{{"steps", s.steps}}; }

Schedule schedule_from_json(const Json& j) {
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw InputError("\"steps\" must be an array of arrays");
  Schedule s;
  for (const Json& step : steps) {
    if (!step.is_array()) throw InputError("each step must be an array of item indices");
    std::vector<std::size_t> v;
    for (const Json& e : step) {
      if (!e.is_number_unsigned()) throw InputError("item indices must be non-negative integers");
      v.push_back(e.get<std::size_t>());
    }
    s.steps.push_back(std::move(v));
  }
  return s;
}

Json to_json(const ReductionCertificate& c) {
  Json out{{"kind", to_string(c.kind)}};
  if (c.kind != ReductionKind::MToR) out["source"] = c.source;
  if (c.kind == ReductionKind::ThreePartitionToDiscrete) out["groups"] = c.groups;
  if (c.source_instance) out["source_instance"] = to_json(*c.source_instance);
  if (c.game) out["game"] = to_json(*c.game);
  if (c.discrete_game) out["discrete_game"] = to_json(*c.discrete_game);
  out["threshold_time"] = to_json(c.threshold_time);
  Json alphas = Json::array();
  for (const auto& a : c.big_alpha) alphas.push_back(to_json(a));
  out["big_alpha"] = alphas;
  return out;
}

ReductionCertificate certificate_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  auto k = kind.is_string() ? parse_reduction_kind(kind.get<std::string>()) : std::nullopt;
  if (!k) throw InputError("unknown certificate kind");
  ReductionCertificate c;
  c.kind = *k;
  if (j.contains("source")) c.source = ints_from_json(j.at("source"), "source");
  if (j.contains("groups")) c.groups = j.at("groups").get<std::size_t>();
  if (j.contains("source_instance")) c.source_instance = instance_from_json(j.at("source_instance"));
  if (j.contains("game")) c.game = instance_from_json(j.at("game"));
  if (j.contains("discrete_game")) c.discrete_game = discrete_instance_from_json(j.at("discrete_game"));
  c.threshold_time = number_from_json(field(j, "threshold_time"), "threshold_time");
  if (j.contains("big_alpha"))
    for (const Json& a : j.at("big_alpha")) c.big_alpha.push_back(number_from_json(a, "big_alpha"));
  return c;
}

Json to_json(const VerifyResult& v) {
  Json out{{"combinatorial_answer", v.source_answer}, {"game_answer", v.game_answer}, {"agree", v.agree}};
  if (v.equal_sum_groups) out["equal_sum_groups"] = *v.equal_sum_groups;
  if (v.source_time) out["source_time"] = to_json(*v.source_time);
  if (v.game_time) out["game_time"] = to_json(*v.game_time);
  return out;
}

Json analysis_to_json(const Instance& inst) {
  Json out;
  out["k"] = inst.k();
  out["mode"] = to_string(instance_mode(inst));
  const Number G = inst.r;
  Json scores = Json::array();
  for (const Item& it : inst.items)
    scores.push_back(G.is_zero() ? Json(nullptr) : to_json(efficiency_score(it.y, it.x, G)));
  out["efficiency_scores_at_start"] = scores;

  if (inst.goal.kind != GoalKind::TimeBudget) out["purchase_caps"] = purchase_caps(inst);
  if (inst.goal.kind == GoalKind::Cookies) {
    out["stop_rate_threshold"] = to_json(stop_rate_threshold(inst.items, inst.goal.value));
    out["purchase_rate_cap"] = to_json(purchase_rate_cap(inst));
  }
  if (inst.k() == 1 && inst.z.is_zero() && inst.goal.kind != GoalKind::TimeBudget) {
    OneItemSolution one = solve_one_item(inst);
    out["one_item"] = {{"k_star", one.k_star},
                       {"total_time", to_json(one.total_time)},
                       {"tie_at_boundary", one.tie_at_boundary},
                       {"harmonic_estimate", one_item_time_estimate(inst)}};
  }
  if (inst.k() == 2) {
    const Number M = inst.goal.kind == GoalKind::Cookies ? inst.goal.value : Number::exact(0);
    try {
      TwoItemThresholds th = two_item_thresholds(inst.items[0], inst.items[1], M);
      Json t{{"t_swap", to_json(th.t_swap)},
             {"t_swap_half", to_json(th.t_swap / Number::exact(2))},
             {"f_value", to_json(th.f_value)},
             {"m_threshold", to_json(th.m_threshold)},
             {"trailing_ones_bound", th.trailing_ones_bound},
             {"replacement_copies", th.replacement_copies},
             {"r_prime", to_json(th.r_prime)}};
      if (inst.goal.kind == GoalKind::Cookies) t["m_sufficient"] = th.m_sufficient;
      out["two_item"] = t;
    } catch (const AssumptionViolated& e) {
      out["two_item"] = {{"error", e.what()}};
    }
    const Item& a = inst.items[0];
    const Item& b = inst.items[1];
    if (a.alpha > Number(1) && b.alpha > Number(1))
      out["trailing_run_bound"] = trailing_run_bound(a.x, b.x, a.alpha, b.alpha);
  }
  bool any_growth = false;
  for (const Item& it : inst.items) any_growth = any_growth || it.alpha > Number(1);
  if (any_growth) out["phase1_rate_threshold"] = phase1_rate_threshold(inst.items).to_double();
  return out;
}


Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace cookie
