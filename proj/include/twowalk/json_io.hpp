#pragma once

#include <json.hpp>

#include "twowalk/h_builder.hpp"
#include "twowalk/verifier.hpp"

namespace twowalk {

// JSON shapes shared by the CLI and the test harnesses. Keys are emitted in
// sorted order by nlohmann::json, so dumps are deterministic.

nlohmann::json walk_json(const TwoWalkResult& r);
nlohmann::json certificate_json(const ToughnessCertificate& c);
nlohmann::json verdict_json(const VerdictReport& r);
nlohmann::json trace_json(const PipelineTrace& t);
nlohmann::json witness_json(const TwoK2Witness& w);

Walk walk_from_json(const nlohmann::json& j);

}  // namespace twowalk
