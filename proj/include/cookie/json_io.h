#pragma once

// JSON forms of instances, strategies and results. A number field is a
// JSON number (float mode) or a "p/q" string (exact mode).

#include <json.hpp>

#include "cookie/discrete.h"
#include "cookie/engine.h"
#include "cookie/model.h"
#include "cookie/reductions.h"
#include "cookie/solvers.h"

namespace cookie {

using Json = nlohmann::ordered_json;

Json to_json(const Number& n);
Number number_from_json(const Json& j, const char* field);

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json to_json(const Strategy& s);
Strategy strategy_from_json(const Json& j);

Json to_json(const SimReport& rep);
Json to_json(const Solution& sol);
Json to_json(const DPStats& st);

Json to_json(const DiscreteInstance& d);
DiscreteInstance discrete_instance_from_json(const Json& j);
Json to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

Json to_json(const ReductionCertificate& c);
ReductionCertificate certificate_from_json(const Json& j);
Json to_json(const VerifyResult& v);

// Stopping rules, caps and structural thresholds that apply to `inst`.
Json analysis_to_json(const Instance& inst);

// Reads and parses a file; InputError on any failure.
Json read_json_file(const std::string& path);

}  // namespace cookie
