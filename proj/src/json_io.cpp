#include "vaeq/json_io.hpp"

namespace vaeq {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json spec_to_json(const PartiteSpec& spec) {
    ordered_json j;
    j["sizes"] = spec.sizes();
    return j;
}

PartiteSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sizes") || !j["sizes"].is_array())
        throw MalformedPartition(R"(spec document must look like {"sizes":[...]})");
    return PartiteSpec(j["sizes"].get<std::vector<int>>());
}

ordered_json partition_to_json(const Partition& partition) {
    ordered_json j;
    j["classes"] = ordered_json::array();
    for (const ColorClass& cls : partition.classes) {
        ordered_json jc;
        jc["counts"] = cls.counts;
        if (cls.members) {
            ordered_json members = ordered_json::array();
            for (const VertexRef& v : *cls.members)
                members.push_back({v.part, v.index});
            jc["members"] = std::move(members);
        }
        j["classes"].push_back(std::move(jc));
    }
    return j;
}

Partition partition_from_json(const json& j, const PartiteSpec& spec) {
    if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
        throw MalformedPartition(R"(partition document must look like {"classes":[...]})");
    Partition partition{spec, {}};
    for (const json& jc : j["classes"]) {
        if (!jc.is_object() || !jc.contains("counts") || !jc["counts"].is_array())
            throw MalformedPartition("every class needs a counts array");
        ColorClass cls;
        cls.counts = jc["counts"].get<std::vector<int>>();
        if (jc.contains("members")) {
            if (!jc["members"].is_array())
                throw MalformedPartition("members must be an array of [part,index] pairs");
            std::vector<VertexRef> members;
            for (const json& jm : jc["members"]) {
                if (!jm.is_array() || jm.size() != 2)
                    throw MalformedPartition("members must be an array of [part,index] pairs");
                members.push_back(VertexRef{jm[0].get<int>(), jm[1].get<int>()});
            }
            cls.members = std::move(members);
        }
        partition.classes.push_back(std::move(cls));
    }
    return partition;
}

ordered_json report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["coversAllVertices"] = report.coversAllVertices;
    j["classesDisjoint"] = report.classesDisjoint;
    j["isEquitable"] = report.isEquitable;
    j["isProper"] = report.isProper;
    j["isTreeColoring"] = report.isTreeColoring;
    j["r"] = report.treeDegreeBound;
    j["firstViolation"] = report.firstViolation;
    return j;
}

ordered_json verdict_to_json(const FeasibilityVerdict& verdict) {
    ordered_json j;
    j["feasible"] = verdict.feasible;
    j["rule"] = verdict.rule;
    j["needed"] = verdict.needed;
    j["available"] = verdict.available;
    j["detail"] = verdict.detail;
    return j;
}

} // namespace vaeq
