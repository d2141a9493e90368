// cookie: command-line front end for the solvers, reductions and oracles.
//
// Exit codes: 0 success, 2 bad input, 3 solver or budget failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cookie/analytic.h"
#include "cookie/discrete.h"
#include "cookie/engine.h"
#include "cookie/json_io.h"
#include "cookie/oracle.h"
#include "cookie/reductions.h"
#include "cookie/solvers.h"

using namespace cookie;

namespace {

struct Globals {
  bool exact = false;
  std::uint64_t seed = 0;
  std::size_t budget = 10'000'000;
};

Instance load_instance(const std::string& path, const Globals& g) {
  Instance inst;
  try {
    inst = instance_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (g.exact) inst = to_mode(inst, NumericMode::Exact);
  require_valid(inst);
  return inst;
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string fmt(const Number& n, int digits = 12) { return n.is_exact() ? n.str() : n.str(digits); }

SolveOptions solve_options(const Globals& g) {
  SolveOptions o;
  o.seed = g.seed;
  o.oracle_budget = g.budget;
  return o;
}

// ------------------------------------------------------------------ solve

struct SolveArgs {
  std::string method = "tuple-dp";
  std::string instance;
  bool validate = false;
  bool stats = false;
  bool rescale = false;
  std::size_t iterations = 2000;
};

int cmd_solve(const SolveArgs& a, const Globals& g) {
  auto method = parse_method(a.method);
  if (!method) throw InputError("unknown method \"" + a.method + "\"");
  Instance inst = load_instance(a.instance, g);
  SolveOptions opts = solve_options(g);
  opts.iterations = a.iterations;
  opts.validate = a.validate;

  if (inst.goal.kind == GoalKind::TimeBudget) {
    BudgetResult br = solve_time_budget(inst, *method, opts);
    write_json(Json{{"best_value", to_json(br.best_value)},
                    {"goal_found", to_json(br.goal_found)},
                    {"solution", to_json(br.solution)}},
               "-");
    return 0;
  }

  DPStats stats;
  Solution sol;
  std::optional<Json> rescaled;
  if (*method == Method::FixedDP && a.rescale) {
    RateRescaling rr = integer_rate_rescaling(inst);
    sol = solve_fixed_dp(rr.scaled, &stats);
    sol.total_time = *simulate(sol.strategy, inst).total_time;
    rescaled = Json{{"factor", to_json(rr.factor)}, {"estimated_states", to_json(rr.estimated_states)}};
  } else {
    sol = solve(inst, *method, opts, &stats);
  }

  Json out = to_json(sol);
  if (a.validate) {
    SimReport rep = simulate(sol.strategy, inst);
    bool ok = rep.total_time && approx_equal(*rep.total_time, sol.total_time);
    out["validated"] = ok;
    if (!ok) throw SolverError("re-simulation does not reproduce the reported time");
  }
  if (a.stats) out["stats"] = to_json(stats);
  if (rescaled) out["rescaling"] = *rescaled;
  write_json(out, "-");
  return 0;
}

// ------------------------------------------------------------------ simulate

int cmd_simulate(const std::string& inst_path, const std::string& strat_path, bool as_json, const Globals& g) {
  Instance inst = load_instance(inst_path, g);
  Strategy s;
  try {
    s = strategy_from_json(read_json_file(strat_path));
  } catch (const Json::exception& e) {
    throw InputError(strat_path + ": " + e.what());
  }
  SimReport rep = simulate(s, inst);
  if (as_json) {
    write_json(to_json(rep), "-");
    return 0;
  }
  std::cout << std::left << std::setw(20) << "time" << std::setw(6) << "item" << std::setw(20) << "price"
            << "rate_after\n";
  for (const auto& e : rep.purchases)
    std::cout << std::setw(20) << fmt(e.time) << std::setw(6) << (e.item + 1) << std::setw(20) << fmt(e.price)
              << fmt(e.rate_after) << '\n';
  std::cout << "buying_phase_end " << fmt(rep.buying_phase_end) << '\n';
  std::cout << "total_time " << (rep.total_time ? fmt(*rep.total_time) : std::string("unreachable")) << '\n';
  std::cout << "final_rate " << fmt(rep.final_rate) << '\n';
  if (rep.truncated) std::cout << "truncated (goal met before the last purchases)\n";
  if (rep.budget_value) std::cout << "budget_value " << fmt(*rep.budget_value) << '\n';
  return 0;
}

// ------------------------------------------------------------------ analyze

int cmd_analyze(const std::string& inst_path, const Globals& g) {
  write_json(analysis_to_json(load_instance(inst_path, g)), "-");
  return 0;
}

// ------------------------------------------------------------------ sweep

int cmd_sweep(const std::string& inst_path, std::optional<std::size_t> r_max, const Globals& g) {
  Instance inst = load_instance(inst_path, g);
  if (inst.k() != 2 || !all_fixed_cost(inst) || inst.goal.kind != GoalKind::Cookies || !inst.z.is_zero())
    throw SolverError("sweep needs a two-item fixed-cost instance with z = 0 and a cookie goal");
  std::size_t limit = r_max ? *r_max : purchase_caps(inst)[0];
  std::cout << "r,total_time,rate_at_switch\n";
  for (const SweepRow& row : prefix_sweep(inst, limit))
    std::cout << row.r << ',' << fmt(row.total_time) << ',' << fmt(row.rate_at_switch) << '\n';
  return 0;
}

// ------------------------------------------------------------------ compare

int cmd_compare(const std::string& inst_path, const std::string& methods, bool as_json, const Globals& g) {
  Instance inst = load_instance(inst_path, g);
  std::vector<std::string> names;
  std::stringstream ss(methods);
  for (std::string m; std::getline(ss, m, ',');)
    if (!m.empty()) names.push_back(m);
  if (names.empty()) throw InputError("no methods given");

  struct Row {
    std::string name;
    std::optional<Solution> sol;
    std::string error;
  };
  std::vector<Row> rows;
  SolveOptions opts = solve_options(g);
  for (const auto& n : names) {
    Row row{n, std::nullopt, ""};
    auto m = parse_method(n);
    try {
      if (!m) throw InputError("unknown method");
      row.sol = solve(inst, *m, opts);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  // Reference: best optimal-method time, else best time overall.
  std::optional<Number> ref;
  for (bool need_optimal : {true, false}) {
    for (const auto& r : rows)
      if (r.sol && (!need_optimal || r.sol->optimal) && (!ref || r.sol->total_time < *ref)) ref = r.sol->total_time;
    if (ref) break;
  }
  if (!ref) {
    for (const auto& r : rows) std::cerr << r.name << ": " << r.error << '\n';
    throw SolverError("no method succeeded");
  }
  if (as_json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      if (r.sol)
        arr.push_back({{"method", r.name},
                       {"total_time", to_json(r.sol->total_time)},
                       {"ratio", (r.sol->total_time / *ref).to_double()},
                       {"purchases", r.sol->strategy.size()}});
      else
        arr.push_back({{"method", r.name}, {"error", r.error}});
    }
    write_json(arr, "-");
    return 0;
  }
  std::cout << std::left << std::setw(14) << "method" << std::setw(22) << "time" << "ratio\n";
  for (const auto& r : rows) {
    std::cout << std::setw(14) << r.name;
    if (r.sol) {
      std::ostringstream ratio;
      ratio << std::setprecision(12) << (r.sol->total_time / *ref).to_double();
      std::cout << std::setw(22) << r.sol->total_time.str(12) << ratio.str() << '\n';
    } else {
      std::cout << "error: " << r.error << '\n';
    }
  }
  return 0;
}

// ------------------------------------------------------------------ reduce / verify

int cmd_reduce(const std::string& kind_name, const std::string& in, const std::string& out, const Globals& g) {
  auto kind = parse_reduction_kind(kind_name);
  if (!kind) throw InputError("unknown reduction \"" + kind_name + "\"");
  Json src = read_json_file(in);
  ReductionCertificate cert;
  try {
    switch (*kind) {
      case ReductionKind::PartitionToRate:
        cert = reduce_partition_to_rate({src.at("a").get<std::vector<std::int64_t>>()});
        break;
      case ReductionKind::PartitionToInitialCookies:
        cert = reduce_partition_to_initial_cookies({src.at("a").get<std::vector<std::int64_t>>()});
        break;
      case ReductionKind::ThreePartitionToDiscrete: {
        auto a = src.at("a").get<std::vector<std::int64_t>>();
        std::size_t m = src.contains("m") ? src.at("m").get<std::size_t>() : a.size() / 3;
        cert = reduce_3partition_to_discrete(a, m);
        break;
      }
      case ReductionKind::MToR: {
        Instance inst = instance_from_json(src);
        if (g.exact) inst = to_mode(inst, NumericMode::Exact);
        cert = reduce_m_to_r(inst);
        break;
      }
    }
  } catch (const Json::exception& e) {
    throw InputError(in + ": " + e.what());
  }
  write_json(to_json(cert), out);
  return 0;
}

int cmd_verify(const std::string& cert_path, const Globals& g) {
  ReductionCertificate cert;
  try {
    cert = certificate_from_json(read_json_file(cert_path));
  } catch (const Json::exception& e) {
    throw InputError(cert_path + ": " + e.what());
  }
  write_json(to_json(verify_certificate(cert, g.budget)), "-");
  return 0;
}

// ------------------------------------------------------------------ discrete

DiscreteInstance load_discrete(const std::string& path) {
  try {
    DiscreteInstance d = discrete_instance_from_json(read_json_file(path));
    require_valid(d);
    return d;
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_discrete_decide(const std::string& path, const Globals& g) {
  DiscreteDecision res = brute_force_discrete(load_discrete(path), g.budget);
  Json out{{"answer", res.yes}, {"states_explored", res.states_explored}};
  if (res.yes) out["witness"] = to_json(res.witness);
  write_json(out, "-");
  return 0;
}

int cmd_discrete_simulate(const std::string& path, const std::string& sched_path) {
  DiscreteInstance d = load_discrete(path);
  Schedule s;
  try {
    s = schedule_from_json(read_json_file(sched_path));
  } catch (const Json::exception& e) {
    throw InputError(sched_path + ": " + e.what());
  }
  DiscreteOutcome o = simulate_discrete(d, s);
  write_json(Json{{"cookies_at_T", to_json(o.cookies_at_T)},
                  {"feasible", o.feasible},
                  {"reaches_goal", o.feasible && o.cookies_at_T >= d.M}},
             "-");
  return 0;
}

// ------------------------------------------------------------------ oracle fixtures

// Small exact instances with their oracle optimum, consumed by the unit
// tests. Deterministic for a given seed.
int cmd_dump_fixtures(const std::string& out, std::size_t count, const Globals& g) {
  Rng rng(g.seed);
  Json arr = Json::array();
  const Number alphas[] = {Number::exact(1), Number::exact(2), Number::exact(3, 2)};
  while (arr.size() < count) {
    Instance inst;
    inst.z = Number::exact(0);
    inst.r = Number::exact(1);
    std::size_t k = 1 + rng.below(2);
    for (std::size_t i = 0; i < k; ++i)
      inst.items.push_back({Number::exact(rng.between(1, 5)), Number::exact(rng.between(2, 20)), alphas[rng.below(3)]});
    bool rate_goal = rng.below(4) == 0;
    inst.goal = rate_goal ? Goal::rate(Number::exact(rng.between(2, 12))) : Goal::cookies(Number::exact(rng.between(10, 120)));
    OracleOptions o;
    o.budget = 200'000;
    try {
      OracleResult res = brute_force_continuous(inst, std::nullopt, o);
      if (!res.best_time) continue;
      arr.push_back({{"instance", to_json(inst)},
                     {"best_time", to_json(*res.best_time)},
                     {"best_strategy", to_json(res.best_strategy)},
                     {"sequences_explored", res.sequences_explored},
                     {"optimal_count", res.optimal_count}});
    } catch (const BudgetExceeded&) {
    }
  }
  write_json(Json{{"seed", g.seed}, {"fixtures", arr}}, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cookie Clicker purchase-scheduling solvers"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("COOKIE_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: COOKIE_BUDGET must be a positive integer\n";
      return 2;
    }
  }
  app.add_flag("--exact", g.exact, "Convert the instance to exact rational arithmetic");
  app.add_option("--seed", g.seed, "RNG seed (local search, fixture generation)");
  app.add_option("--budget", g.budget, "Oracle / brute-force search budget (env COOKIE_BUDGET)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve an instance with one method");
  solve->add_option("--method", sa.method, "fixed-dp|tuple-dp|two-item|greedy-ratio|greedy-eff|local|oracle|closed-form");
  solve->add_option("--instance", sa.instance, "Instance JSON")->required();
  solve->add_flag("--validate", sa.validate, "Re-simulate and check the reported time (two-item: exhaustive s-scan)");
  solve->add_flag("--stats", sa.stats, "Include DP statistics");
  solve->add_flag("--rescale", sa.rescale, "fixed-dp: rescale fractional rates to integers first");
  solve->add_option("--iterations", sa.iterations, "Local-search iteration cap");

  std::string sim_inst, sim_strat;
  bool sim_json = false;
  auto* sim = app.add_subcommand("simulate", "Execute a strategy and print its timeline");
  sim->add_option("--instance", sim_inst)->required();
  sim->add_option("--strategy", sim_strat)->required();
  sim->add_flag("--json", sim_json);

  std::string an_inst;
  auto* analyze = app.add_subcommand("analyze", "Print stopping rules and structural thresholds as JSON");
  analyze->add_option("--instance", an_inst)->required();

  std::string sw_inst;
  std::optional<std::size_t> sw_rmax;
  auto* sweep = app.add_subcommand("sweep", "CSV of best time per item-1 prefix length (two items)");
  sweep->add_option("--instance", sw_inst)->required();
  sweep->add_option("--r-max", sw_rmax, "Largest prefix length (default: purchase cap of item 1)");

  std::string cmp_inst, cmp_methods = "tuple-dp,greedy-eff,greedy-ratio";
  bool cmp_json = false;
  auto* compare = app.add_subcommand("compare", "Run several methods and report time ratios");
  compare->add_option("--instance", cmp_inst)->required();
  compare->add_option("--methods", cmp_methods, "Comma-separated method list");
  compare->add_flag("--json", cmp_json);

  std::string red_kind, red_in, red_out;
  auto* reduce = app.add_subcommand("reduce", "Generate a hardness-reduction certificate");
  reduce->add_option("kind", red_kind, "partition-to-rate|partition-to-initial|3partition-to-discrete|m-to-r")->required();
  reduce->add_option("--in", red_in, "Source JSON ({\"a\":[..]} or an instance for m-to-r)")->required();
  reduce->add_option("--out", red_out, "Certificate output (default stdout)");

  std::string ver_cert;
  auto* verify = app.add_subcommand("verify", "Brute-force both sides of a certificate");
  verify->add_option("--cert", ver_cert)->required();

  auto* discrete = app.add_subcommand("discrete", "Discrete-timestep game");
  discrete->require_subcommand(1);
  std::string d_inst, d_sched;
  auto* decide = discrete->add_subcommand("decide", "Can the goal be met by the deadline?");
  decide->add_option("--instance", d_inst)->required();
  auto* dsim = discrete->add_subcommand("simulate", "Run a per-step purchase schedule");
  dsim->add_option("--instance", d_inst)->required();
  dsim->add_option("--schedule", d_sched)->required();

  auto* oracle = app.add_subcommand("oracle", "Oracle utilities");
  oracle->require_subcommand(1);
  std::string fx_out = "-";
  std::size_t fx_count = 40;
  auto* dump = oracle->add_subcommand("dump-fixtures", "Write oracle expected-value fixtures");
  dump->add_option("--out", fx_out);
  dump->add_option("--count", fx_count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(sa, g);
    if (*sim) return cmd_simulate(sim_inst, sim_strat, sim_json, g);
    if (*analyze) return cmd_analyze(an_inst, g);
    if (*sweep) return cmd_sweep(sw_inst, sw_rmax, g);
    if (*compare) return cmd_compare(cmp_inst, cmp_methods, cmp_json, g);
    if (*reduce) return cmd_reduce(red_kind, red_in, red_out, g);
    if (*verify) return cmd_verify(ver_cert, g);
    if (*decide) return cmd_discrete_decide(d_inst, g);
    if (*dsim) return cmd_discrete_simulate(d_inst, d_sched);
    if (*dump) return cmd_dump_fixtures(fx_out, fx_count, g);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
