#pragma once

#include <string>
#include <vector>

#include "accessnet/errors.hpp"
#include "accessnet/model.hpp"
#include "accessnet/solution.hpp"

namespace accessnet {

// Per-building distributed design: partition users and switches by building,
// wire each user to the closest same-profile access switch with a free port in
// its own building, pick one distribution switch per building and uplink every
// used access switch to it.

struct BuildingAssignment {
    std::string user;
    std::string access;
    double length_m = 0;
};

struct BuildingPlan {
    std::string building;
    std::vector<std::string> users;              // sorted by id
    std::vector<std::string> office_switches;    // sorted by id
    std::vector<std::string> always_on_switches; // sorted by id
    std::vector<std::string> distribution_candidates;

    // Filled in by design_building:
    std::string chosen_distribution;
    std::vector<BuildingAssignment> assignments;
    std::vector<std::string> used_access;  // sorted, deduplicated
};

struct BuildingProblem {
    std::string building;
    std::string code;
    std::string detail;
};

struct PartitionResult {
    std::vector<BuildingPlan> buildings;  // sorted by building id; only buildings with users
    std::vector<BuildingProblem> problems;
};

// Exhaustive, disjoint split of the users by building id. A building whose
// users need a profile with no same-building access switch is reported as a
// per-building problem.
PartitionResult partition_by_building(const NetworkInstance& inst);

// Users are processed in ascending (distance to nearest same-profile switch,
// user id) order and each takes the nearest same-profile switch with a free
// port; the distribution switch is the cheapest (switch + core uplink), ties
// by id. Throws Error with code capacity_exhausted / no_distribution_switch /
// missing_uplink.
void design_building(const NetworkInstance& inst, BuildingPlan& plan);

class HeuristicError : public Error {
public:
    explicit HeuristicError(std::vector<BuildingProblem> problems);
    const std::vector<BuildingProblem>& problems() const { return problems_; }

private:
    std::vector<BuildingProblem> problems_;
};

struct HeuristicResult {
    DesignSolution solution;
    std::vector<BuildingPlan> buildings;
};

// All buildings designed independently and merged in sorted building order.
// Throws HeuristicError aggregating every per-building failure.
HeuristicResult heuristic_design(const NetworkInstance& inst);

struct WireOverhead {
    double extra_length_m = 0;
    Money extra_cost = 0;  // copper
};

// How much farther each user is wired compared to its closest candidate of
// any profile, summed over the network.
WireOverhead wire_overhead(const NetworkInstance& inst, const DesignSolution& sol);

}  // namespace accessnet
