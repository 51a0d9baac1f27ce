#pragma once

#include <json.hpp>

#include "vaeq/graph_model.hpp"
#include "vaeq/verifier.hpp"

namespace vaeq {

// Wire formats. Field order is fixed; all arrays are zero-indexed.
//   spec:      {"sizes":[...]}
//   partition: {"classes":[{"counts":[...],"members":[[part,index],...]?},...]}

nlohmann::ordered_json spec_to_json(const PartiteSpec& spec);
PartiteSpec spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json partition_to_json(const Partition& partition);
Partition partition_from_json(const nlohmann::json& j, const PartiteSpec& spec);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json verdict_to_json(const FeasibilityVerdict& verdict);

} // namespace vaeq
