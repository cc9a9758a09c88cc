#include "accessnet/heuristic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace accessnet {

namespace {

std::string join_problems(const std::vector<BuildingProblem>& problems) {
    std::string out = "heuristic design failed in " + std::to_string(problems.size()) +
                      " building(s):";
    for (const auto& p : problems) {
        out += " [" + p.building + "] " + p.code + ": " + p.detail + ";";
    }
    return out;
}

}  // namespace

HeuristicError::HeuristicError(std::vector<BuildingProblem> problems)
    : Error("heuristic_failed", join_problems(problems)), problems_(std::move(problems)) {}

PartitionResult partition_by_building(const NetworkInstance& inst) {
    PartitionResult result;

    std::map<std::string, BuildingPlan> plans;
    for (const auto& u : inst.users) {
        BuildingPlan& plan = plans[u.building];
        plan.building = u.building;
        plan.users.push_back(u.id);
    }
    // Switches are resources of their building; buildings without users get no plan.
    for (const auto& a : inst.access_switches) {
        auto it = plans.find(a.building);
        if (it == plans.end()) continue;
        auto& bucket = a.profile == Profile::office ? it->second.office_switches
                                                    : it->second.always_on_switches;
        bucket.push_back(a.id);
    }
    for (const auto& d : inst.distribution_switches) {
        auto it = plans.find(d.building);
        if (it == plans.end()) continue;
        it->second.distribution_candidates.push_back(d.id);
    }

    for (auto& [building, plan] : plans) {
        std::sort(plan.users.begin(), plan.users.end());
        std::sort(plan.office_switches.begin(), plan.office_switches.end());
        std::sort(plan.always_on_switches.begin(), plan.always_on_switches.end());
        std::sort(plan.distribution_candidates.begin(), plan.distribution_candidates.end());

        bool needs_office = false, needs_always_on = false;
        for (const auto& user_id : plan.users) {
            if (inst.find_user(user_id)->profile == Profile::office) {
                needs_office = true;
            } else {
                needs_always_on = true;
            }
        }
        if (needs_office && plan.office_switches.empty()) {
            result.problems.push_back({building, "missing_profile_switch",
                                       "office users but no office access switch in building"});
        }
        if (needs_always_on && plan.always_on_switches.empty()) {
            result.problems.push_back(
                {building, "missing_profile_switch",
                 "always-on users but no always-on access switch in building"});
        }
        result.buildings.push_back(std::move(plan));
    }
    return result;
}

void design_building(const NetworkInstance& inst, BuildingPlan& plan) {
    constexpr double kNoLink = std::numeric_limits<double>::infinity();

    auto link_length = [&](const std::string& user_id, const std::string& access_id) {
        auto it = inst.user_access_links.find({user_id, access_id});
        return it == inst.user_access_links.end() ? kNoLink : it->second.length_m;
    };

    // Order users by how close their nearest same-profile switch is, then id.
    struct Ranked {
        double nearest;
        std::string user;
    };
    std::vector<Ranked> ranked;
    for (const auto& user_id : plan.users) {
        const User* u = inst.find_user(user_id);
        const auto& candidates =
            u->profile == Profile::office ? plan.office_switches : plan.always_on_switches;
        double nearest = kNoLink;
        for (const auto& access_id : candidates) {
            nearest = std::min(nearest, link_length(user_id, access_id));
        }
        if (nearest == kNoLink) {
            throw Error("capacity_exhausted",
                        "user " + user_id + " has no same-profile switch link in building " +
                            plan.building);
        }
        ranked.push_back({nearest, user_id});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& lhs, const Ranked& rhs) {
        return std::tie(lhs.nearest, lhs.user) < std::tie(rhs.nearest, rhs.user);
    });

    std::map<std::string, int> ports_left;
    for (const auto& a : inst.access_switches) ports_left[a.id] = a.max_users;

    plan.assignments.clear();
    plan.used_access.clear();
    for (const auto& entry : ranked) {
        const User* u = inst.find_user(entry.user);
        const auto& candidates =
            u->profile == Profile::office ? plan.office_switches : plan.always_on_switches;
        std::string chosen;
        double chosen_length = kNoLink;
        for (const auto& access_id : candidates) {
            if (ports_left[access_id] <= 0) continue;
            double length = link_length(entry.user, access_id);
            if (length < chosen_length) {  // candidate ids ascend, ties keep the first
                chosen_length = length;
                chosen = access_id;
            }
        }
        if (chosen.empty()) {
            throw Error("capacity_exhausted",
                        "all same-profile switches in building " + plan.building +
                            " are full before user " + entry.user);
        }
        --ports_left[chosen];
        plan.assignments.push_back({entry.user, chosen, chosen_length});
        plan.used_access.push_back(chosen);
    }
    std::sort(plan.used_access.begin(), plan.used_access.end());
    plan.used_access.erase(std::unique(plan.used_access.begin(), plan.used_access.end()),
                           plan.used_access.end());
    std::sort(plan.assignments.begin(), plan.assignments.end(),
              [](const BuildingAssignment& lhs, const BuildingAssignment& rhs) {
                  return lhs.user < rhs.user;
              });

    // One distribution switch per building: cheapest switch-plus-uplink cost.
    Money best_cost = 0;
    plan.chosen_distribution.clear();
    for (const auto& dist_id : plan.distribution_candidates) {
        auto core_link = inst.dist_core_links.find(dist_id);
        if (core_link == inst.dist_core_links.end()) continue;
        Money cost = inst.find_distribution(dist_id)->cost + core_link->second.cost;
        if (plan.chosen_distribution.empty() || cost < best_cost) {
            best_cost = cost;
            plan.chosen_distribution = dist_id;
        }
    }
    if (plan.chosen_distribution.empty()) {
        throw Error("no_distribution_switch",
                    "building " + plan.building + " has no usable distribution switch");
    }

    const DistributionSwitch* chosen = inst.find_distribution(plan.chosen_distribution);
    if (static_cast<int>(plan.used_access.size()) > chosen->max_access) {
        throw Error("capacity_exhausted",
                    "building " + plan.building + " uses " +
                        std::to_string(plan.used_access.size()) +
                        " access switches but distribution switch " + chosen->id +
                        " accepts " + std::to_string(chosen->max_access));
    }
    for (const auto& access_id : plan.used_access) {
        if (!inst.access_dist_links.count({access_id, plan.chosen_distribution})) {
            throw Error("missing_uplink", "building " + plan.building + ": no link from " +
                                              access_id + " to " + plan.chosen_distribution);
        }
    }
}

HeuristicResult heuristic_design(const NetworkInstance& inst) {
    PartitionResult partition = partition_by_building(inst);
    std::vector<BuildingProblem> problems = partition.problems;

    for (auto& plan : partition.buildings) {
        bool already_failed = false;
        for (const auto& p : problems) already_failed |= p.building == plan.building;
        if (already_failed) continue;
        try {
            design_building(inst, plan);
        } catch (const Error& e) {
            problems.push_back({plan.building, e.code(), e.what()});
        }
    }
    if (!problems.empty()) throw HeuristicError(std::move(problems));

    HeuristicResult result;
    Money cost = inst.core.cost;
    for (auto& plan : partition.buildings) {
        for (const auto& assignment : plan.assignments) {
            result.solution.user_assignment[assignment.user] = assignment.access;
            cost += inst.user_access_links.at({assignment.user, assignment.access}).cost;
        }
        for (const auto& access_id : plan.used_access) {
            result.solution.open_access.insert(access_id);
            result.solution.access_assignment[access_id] = plan.chosen_distribution;
            cost += inst.find_access(access_id)->cost;
            cost += inst.access_dist_links.at({access_id, plan.chosen_distribution}).cost;
        }
        result.solution.open_distribution.insert(plan.chosen_distribution);
        cost += inst.find_distribution(plan.chosen_distribution)->cost;
        cost += inst.dist_core_links.at(plan.chosen_distribution).cost;
        result.buildings.push_back(std::move(plan));
    }
    result.solution.total_cost = cost;
    return result;
}

WireOverhead wire_overhead(const NetworkInstance& inst, const DesignSolution& sol) {
    WireOverhead overhead;
    for (const auto& [user_id, access_id] : sol.user_assignment) {
        auto assigned = inst.user_access_links.find({user_id, access_id});
        if (assigned == inst.user_access_links.end()) {
            throw Error("no_candidate_link",
                        "solution assigns " + user_id + " over a link that does not exist");
        }
        double shortest = assigned->second.length_m;
        auto it = inst.user_access_links.lower_bound({user_id, ""});
        for (; it != inst.user_access_links.end() && it->first.first == user_id; ++it) {
            shortest = std::min(shortest, it->second.length_m);
        }
        overhead.extra_length_m += assigned->second.length_m - shortest;
    }
    overhead.extra_cost = link_cost_from_length(overhead.extra_length_m, Medium::copper,
                                                inst.rates);
    return overhead;
}

}  // namespace accessnet
