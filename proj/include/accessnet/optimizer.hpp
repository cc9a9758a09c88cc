#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "accessnet/model.hpp"
#include "accessnet/solution.hpp"

namespace accessnet {

// Exact design of the cheapest tree: assemble the binary integer program and
// solve it by branch and bound, cross-checked by an exhaustive oracle. Meant
// for small instances; the heuristic module covers scale.

enum class Relation { eq, le };

struct IlpConstraint {
    std::string family;   // structural tag, one per constraint family
    std::string subject;  // id of the user / switch / link the row is about
    std::vector<std::pair<int, int>> terms;  // (variable index, coefficient)
    Relation rel = Relation::le;
    int rhs = 0;
};

// Binary variables: one w per candidate user-access link (cross-profile pairs
// are pruned), one x per access switch, one y per candidate access-distribution
// link, one z per distribution switch. The core switch is always paid and is
// carried as a constant, not a variable.
struct IlpModel {
    std::map<std::pair<std::string, std::string>, int> w_index;  // (user, access)
    std::map<std::string, int> x_index;                          // access
    std::map<std::pair<std::string, std::string>, int> y_index;  // (access, distribution)
    std::map<std::string, int> z_index;                          // distribution
    std::vector<Money> objective;  // per-variable cost, minor units
    Money constant_cost = 0;       // core switch cost
    std::vector<IlpConstraint> constraints;

    int variable_count() const { return static_cast<int>(objective.size()); }
    std::size_t family_count(std::string_view family) const;
};

// Requires a validated instance (validate_instance empty).
IlpModel build_ilp(const NetworkInstance& inst);

struct SolveLimits {
    std::uint64_t max_nodes = 50'000'000;
    double time_budget_s = 60.0;
};

enum class SolveStatus {
    optimal,              // proved minimum cost
    feasible_not_proven,  // limits hit; best incumbent returned
    infeasible,           // proved no assignment satisfies the constraints
    unknown,              // limits hit before any incumbent was found
};

const char* to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::unknown;
    std::optional<DesignSolution> solution;
    std::uint64_t explored_nodes = 0;

    bool proven_optimal() const { return status == SolveStatus::optimal; }
};

// Depth-first branch and bound over user assignments, branching on the
// unassigned user with the fewest open candidates; bound = committed cost plus
// each unassigned user's cheapest candidate link (switch-opening costs of
// not-yet-used switches are ignored, which keeps the bound admissible).
// Deterministic: equal-cost optima resolve to the lexicographically smallest
// assignment (sorted user id -> access id, then sorted access id ->
// distribution id).
SolveResult solve_exact(const NetworkInstance& inst, const SolveLimits& limits = {});

// Independent oracle: plain exhaustive enumeration of every profile-respecting
// assignment, same tie-break. Refuses instances beyond 8 users, 4 access
// switches or 3 distribution switches (Error "instance_too_large").
SolveResult brute_force(const NetworkInstance& inst);

// Point checks of every constraint plus the tree property (traversal from the
// core) and an exact recomputation of total_cost. Empty report = feasible.
ValidationReport check_solution(const NetworkInstance& inst, const DesignSolution& sol);

}  // namespace accessnet
