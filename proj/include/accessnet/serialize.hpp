#pragma once

#include <json.hpp>

#include "accessnet/activity.hpp"
#include "accessnet/heuristic.hpp"
#include "accessnet/model.hpp"
#include "accessnet/optimizer.hpp"
#include "accessnet/savings.hpp"
#include "accessnet/solution.hpp"

namespace accessnet {

// JSON shapes for the report documents the CLI emits. Money appears in major
// units; keys are sorted by nlohmann's ordered object storage, so identical
// inputs serialize byte-identically.

nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const DesignSolution& sol);
nlohmann::json solution_document(const DesignSolution& sol, bool proven_optimal,
                                 std::uint64_t explored_nodes);
DesignSolution solution_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const BuildingPlan& plan);
nlohmann::json to_json(const WireOverhead& overhead);
nlohmann::json to_json(const ClassificationResult& result);
nlohmann::json to_json(const PingReport& report);
nlohmann::json to_json(const SwitchCatalogEntry& entry);
nlohmann::json to_json(const SavingsReport& report);
nlohmann::json to_json(const PowerScenario& scenario);

}  // namespace accessnet
