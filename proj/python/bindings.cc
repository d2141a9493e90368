// Python bindings. Everything crosses the boundary as JSON text; the
// cookie_clicker package turns it into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cookie/engine.h"
#include "cookie/json_io.h"
#include "cookie/oracle.h"
#include "cookie/reductions.h"
#include "cookie/solvers.h"

namespace py = pybind11;
using namespace cookie;

namespace {

Instance load(const std::string& text, bool exact) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
  Instance inst = instance_from_json(j);
  if (exact) inst = to_mode(inst, NumericMode::Exact);
  require_valid(inst);
  return inst;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
}

std::string solve_json(const std::string& instance, const std::string& method, bool exact, std::uint64_t seed,
                       std::size_t iterations, bool validate, bool stats) {
  auto m = parse_method(method);
  if (!m) throw InputError("unknown method \"" + method + "\"");
  Instance inst = load(instance, exact);
  SolveOptions o;
  o.seed = seed;
  o.iterations = iterations;
  o.validate = validate;
  if (inst.goal.kind == GoalKind::TimeBudget) {
    BudgetResult br = solve_time_budget(inst, *m, o);
    return Json{{"best_value", to_json(br.best_value)},
                {"goal_found", to_json(br.goal_found)},
                {"solution", to_json(br.solution)}}
        .dump();
  }
  DPStats st;
  Json out = to_json(solve(inst, *m, o, &st));
  if (stats) out["stats"] = to_json(st);
  return out.dump();
}

std::string simulate_json(const std::string& instance, const std::vector<std::size_t>& purchases, bool exact) {
  return to_json(simulate(Strategy{purchases}, load(instance, exact))).dump();
}

std::string analyze_json(const std::string& instance, bool exact) {
  return analysis_to_json(load(instance, exact)).dump();
}

std::string sweep_json(const std::string& instance, std::size_t r_max, bool exact) {
  Json rows = Json::array();
  for (const SweepRow& r : prefix_sweep(load(instance, exact), r_max))
    rows.push_back({{"r", r.r},
                    {"total_time", to_json(r.total_time)},
                    {"rate_at_switch", to_json(r.rate_at_switch)},
                    {"best_s", r.best_s}});
  return rows.dump();
}

std::string oracle_json(const std::string& instance, std::size_t budget) {
  OracleOptions o;
  o.budget = budget;
  OracleResult r = brute_force_continuous(load(instance, true), std::nullopt, o);
  return Json{{"best_time", r.best_time ? to_json(*r.best_time) : Json(nullptr)},
              {"best_strategy", to_json(r.best_strategy)},
              {"sequences_explored", r.sequences_explored},
              {"optimal_count", r.optimal_count}}
      .dump();
}

std::string reduce_json(const std::string& kind, const std::string& source) {
  auto k = parse_reduction_kind(kind);
  if (!k) throw InputError("unknown reduction \"" + kind + "\"");
  Json src = parse(source);
  auto ints = [&] {
    if (!src.contains("a")) throw InputError("source needs \"a\"");
    return src.at("a").get<std::vector<std::int64_t>>();
  };
  ReductionCertificate c;
  switch (*k) {
    case ReductionKind::PartitionToRate: c = reduce_partition_to_rate({ints()}); break;
    case ReductionKind::PartitionToInitialCookies: c = reduce_partition_to_initial_cookies({ints()}); break;
    case ReductionKind::ThreePartitionToDiscrete: {
      auto a = ints();
      std::size_t m = src.contains("m") ? src.at("m").get<std::size_t>() : a.size() / 3;
      c = reduce_3partition_to_discrete(a, m);
      break;
    }
    case ReductionKind::MToR: c = reduce_m_to_r(instance_from_json(src)); break;
  }
  return to_json(c).dump();
}

std::string verify_json(const std::string& cert, std::size_t budget) {
  return to_json(verify_certificate(certificate_from_json(parse(cert)), budget)).dump();
}

std::string decide_discrete_json(const std::string& instance, std::size_t budget) {
  DiscreteInstance d = discrete_instance_from_json(parse(instance));
  require_valid(d);
  DiscreteDecision r = brute_force_discrete(d, budget);
  Json out{{"answer", r.yes}, {"states_explored", r.states_explored}};
  if (r.yes) out["witness"] = to_json(r.witness);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cookie Clicker purchase-scheduling solvers";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<SolverError> solver_error(m, "SolverError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      input_error(e.what());
    } catch (const SolverError& e) {
      solver_error(e.what());
    } catch (const NumericError& e) {
      solver_error(e.what());
    } catch (const Json::exception& e) {
      input_error(e.what());
    }
  });

  m.def("solve", &solve_json, py::arg("instance"), py::arg("method") = "tuple-dp", py::arg("exact") = false,
        py::arg("seed") = 0, py::arg("iterations") = 2000, py::arg("validate") = false, py::arg("stats") = false);
  m.def("simulate", &simulate_json, py::arg("instance"), py::arg("purchases"), py::arg("exact") = false);
  m.def("analyze", &analyze_json, py::arg("instance"), py::arg("exact") = false);
  m.def("sweep", &sweep_json, py::arg("instance"), py::arg("r_max"), py::arg("exact") = false);
  m.def("oracle", &oracle_json, py::arg("instance"), py::arg("budget") = 10'000'000);
  m.def("reduce", &reduce_json, py::arg("kind"), py::arg("source"));
  m.def("verify", &verify_json, py::arg("certificate"), py::arg("budget") = 10'000'000);
  m.def("decide_discrete", &decide_discrete_json, py::arg("instance"), py::arg("budget") = 10'000'000);
}
