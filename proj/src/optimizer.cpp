#include "accessnet/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "accessnet/errors.hpp"

namespace accessnet {

namespace {

constexpr Money kInfinity = std::numeric_limits<Money>::max() / 4;

struct Candidate {
    int target = -1;  // index into the sorted switch vector
    Money cost = 0;
};

// Id-sorted view of an instance. Index order equals lexicographic id order,
// so comparing index vectors realizes the documented tie-break.
struct Index {
    std::vector<const User*> users;
    std::vector<const AccessSwitch*> access;
    std::vector<const DistributionSwitch*> dist;
    std::vector<std::vector<Candidate>> user_cand;    // per user, ascending access index
    std::vector<std::vector<Candidate>> access_cand;  // per access, ascending dist index
    std::vector<Money> access_cost;                   // c_a
    std::vector<Money> dist_cost;                     // c_d + c_ds
    std::vector<int> access_ports;                    // max users
    std::vector<int> dist_ports;                      // max access switches
};

Index build_index(const NetworkInstance& inst) {
    Index ix;
    for (const auto& u : inst.users) ix.users.push_back(&u);
    for (const auto& a : inst.access_switches) ix.access.push_back(&a);
    for (const auto& d : inst.distribution_switches) ix.dist.push_back(&d);
    auto by_id = [](const auto* lhs, const auto* rhs) { return lhs->id < rhs->id; };
    std::sort(ix.users.begin(), ix.users.end(), by_id);
    std::sort(ix.access.begin(), ix.access.end(), by_id);
    std::sort(ix.dist.begin(), ix.dist.end(), by_id);

    std::map<std::string, int> access_pos, dist_pos;
    for (int i = 0; i < static_cast<int>(ix.access.size()); ++i) access_pos[ix.access[i]->id] = i;
    for (int i = 0; i < static_cast<int>(ix.dist.size()); ++i) dist_pos[ix.dist[i]->id] = i;

    ix.user_cand.resize(ix.users.size());
    for (std::size_t ui = 0; ui < ix.users.size(); ++ui) {
        const User& u = *ix.users[ui];
        for (int ai = 0; ai < static_cast<int>(ix.access.size()); ++ai) {
            if (ix.access[ai]->profile != u.profile) continue;
            auto it = inst.user_access_links.find({u.id, ix.access[ai]->id});
            if (it == inst.user_access_links.end()) continue;
            ix.user_cand[ui].push_back({ai, it->second.cost});
        }
    }

    ix.access_cand.resize(ix.access.size());
    ix.access_cost.resize(ix.access.size());
    ix.access_ports.resize(ix.access.size());
    for (int ai = 0; ai < static_cast<int>(ix.access.size()); ++ai) {
        ix.access_cost[ai] = ix.access[ai]->cost;
        ix.access_ports[ai] = ix.access[ai]->max_users;
        for (int di = 0; di < static_cast<int>(ix.dist.size()); ++di) {
            // A distribution switch without a core uplink cannot be priced or
            // used; validated instances always have one.
            if (!inst.dist_core_links.count(ix.dist[di]->id)) continue;
            auto it = inst.access_dist_links.find({ix.access[ai]->id, ix.dist[di]->id});
            if (it == inst.access_dist_links.end()) continue;
            ix.access_cand[ai].push_back({di, it->second.cost});
        }
    }

    ix.dist_cost.resize(ix.dist.size(), kInfinity);
    ix.dist_ports.resize(ix.dist.size());
    for (int di = 0; di < static_cast<int>(ix.dist.size()); ++di) {
        ix.dist_ports[di] = ix.dist[di]->max_access;
        auto it = inst.dist_core_links.find(ix.dist[di]->id);
        if (it != inst.dist_core_links.end()) {
            ix.dist_cost[di] = ix.dist[di]->cost + it->second.cost;
        }
    }
    return ix;
}

bool profile_capacity_holds(const NetworkInstance& inst) {
    for (Profile profile : {Profile::office, Profile::always_on}) {
        long long demand = 0, ports = 0;
        for (const auto& u : inst.users) demand += u.profile == profile;
        for (const auto& a : inst.access_switches) {
            if (a.profile == profile) ports += a.max_users;
        }
        if (demand > ports) return false;
    }
    return true;
}

// Second stage: wire a fixed set of used access switches to distribution
// switches at minimum cost. Results depend only on the open set, so they are
// memoized across branch-and-bound leaves.
struct Stage2Result {
    bool feasible = false;
    Money cost = 0;
    std::vector<int> dist_for_open;  // parallel to the sorted open list
};

class Stage2Solver {
public:
    explicit Stage2Solver(const Index& ix) : ix_(ix), ports_left_(ix.dist_ports) {}

    const Stage2Result& solve(const std::vector<int>& open_access) {
        auto [it, fresh] = memo_.try_emplace(open_access);
        if (!fresh) return it->second;
        open_ = &open_access;
        best_ = Stage2Result{};
        current_.assign(open_access.size(), -1);
        ports_left_ = ix_.dist_ports;
        uses_.assign(ix_.dist.size(), 0);
        descend(0, 0);
        it->second = best_;
        return it->second;
    }

private:
    void descend(std::size_t pos, Money committed) {
        if (best_.feasible && lower_bound(pos, committed) > best_.cost) return;
        if (pos == open_->size()) {
            // Candidates are explored in ascending index order, so the first
            // solution at any cost is the lexicographically smallest one.
            if (!best_.feasible || committed < best_.cost) {
                best_.feasible = true;
                best_.cost = committed;
                best_.dist_for_open = current_;
            }
            return;
        }
        const int access = (*open_)[pos];
        for (const Candidate& cand : ix_.access_cand[access]) {
            if (ports_left_[cand.target] == 0) continue;
            Money delta = cand.cost + (uses_[cand.target] == 0 ? ix_.dist_cost[cand.target] : 0);
            --ports_left_[cand.target];
            ++uses_[cand.target];
            current_[pos] = cand.target;
            descend(pos + 1, committed + delta);
            current_[pos] = -1;
            --uses_[cand.target];
            ++ports_left_[cand.target];
        }
    }

    Money lower_bound(std::size_t pos, Money committed) const {
        Money bound = committed;
        for (std::size_t p = pos; p < open_->size(); ++p) {
            Money cheapest = kInfinity;
            for (const Candidate& cand : ix_.access_cand[(*open_)[p]]) {
                if (ports_left_[cand.target] > 0) cheapest = std::min(cheapest, cand.cost);
            }
            if (cheapest == kInfinity) return kInfinity;
            bound += cheapest;
        }
        return bound;
    }

    const Index& ix_;
    const std::vector<int>* open_ = nullptr;
    Stage2Result best_;
    std::vector<int> current_;
    std::vector<int> ports_left_;
    std::vector<int> uses_;
    std::map<std::vector<int>, Stage2Result> memo_;
};

DesignSolution assemble_solution(const Index& ix, const std::vector<int>& user_assignment,
                                 const std::vector<int>& open_access,
                                 const std::vector<int>& dist_for_open, Money total_cost) {
    DesignSolution sol;
    sol.total_cost = total_cost;
    for (std::size_t ui = 0; ui < user_assignment.size(); ++ui) {
        sol.user_assignment[ix.users[ui]->id] = ix.access[user_assignment[ui]]->id;
    }
    for (std::size_t i = 0; i < open_access.size(); ++i) {
        const std::string& access_id = ix.access[open_access[i]]->id;
        sol.open_access.insert(access_id);
        sol.access_assignment[access_id] = ix.dist[dist_for_open[i]]->id;
        sol.open_distribution.insert(ix.dist[dist_for_open[i]]->id);
    }
    return sol;
}

class BranchAndBound {
public:
    BranchAndBound(const NetworkInstance& inst, const Index& ix, const SolveLimits& limits)
        : inst_(inst), ix_(ix), limits_(limits), stage2_(ix) {}

    SolveResult run() {
        SolveResult result;
        if (!profile_capacity_holds(inst_)) {
            result.status = SolveStatus::infeasible;
            return result;
        }
        for (const auto& cands : ix_.user_cand) {
            if (cands.empty()) {
                result.status = SolveStatus::infeasible;
                return result;
            }
        }

        assignment_.assign(ix_.users.size(), -1);
        ports_left_ = ix_.access_ports;
        users_on_.assign(ix_.access.size(), 0);
        unassigned_ = ix_.users.size();
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(limits_.time_budget_s));

        descend(0);

        result.explored_nodes = nodes_;
        if (stopped_) {
            result.status =
                has_incumbent_ ? SolveStatus::feasible_not_proven : SolveStatus::unknown;
        } else {
            result.status = has_incumbent_ ? SolveStatus::optimal : SolveStatus::infeasible;
        }
        if (has_incumbent_) {
            result.solution = assemble_solution(ix_, best_assignment_, best_open_,
                                                best_dist_for_open_, best_cost_);
        }
        return result;
    }

private:
    void descend(Money committed) {
        if (stopped_) return;
        ++nodes_;
        if (nodes_ > limits_.max_nodes ||
            ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)) {
            stopped_ = true;
            return;
        }

        if (unassigned_ == 0) {
            settle_leaf(committed);
            return;
        }

        // Branch on the unassigned user with the fewest open candidates.
        std::size_t branch_user = ix_.users.size();
        int fewest = std::numeric_limits<int>::max();
        for (std::size_t ui = 0; ui < ix_.users.size(); ++ui) {
            if (assignment_[ui] != -1) continue;
            int open = 0;
            for (const Candidate& cand : ix_.user_cand[ui]) {
                open += ports_left_[cand.target] > 0;
            }
            if (open == 0) return;  // dead end: some user can no longer be placed
            if (open < fewest) {
                fewest = open;
                branch_user = ui;
            }
        }

        for (const Candidate& cand : ix_.user_cand[branch_user]) {
            if (ports_left_[cand.target] == 0) continue;
            Money delta = cand.cost + (users_on_[cand.target] == 0 ? ix_.access_cost[cand.target]
                                                                   : 0);
            assignment_[branch_user] = cand.target;
            --ports_left_[cand.target];
            ++users_on_[cand.target];
            --unassigned_;

            // Pruning is strict (> not >=) so equal-cost optima stay reachable
            // and the lexicographic tie-break can pick among all of them.
            if (!has_incumbent_ || lower_bound(committed + delta) <= best_cost_) {
                descend(committed + delta);
            }

            ++unassigned_;
            --users_on_[cand.target];
            ++ports_left_[cand.target];
            assignment_[branch_user] = -1;
            if (stopped_) return;
        }
    }

    Money lower_bound(Money committed) const {
        Money bound = committed;
        for (std::size_t ui = 0; ui < ix_.users.size(); ++ui) {
            if (assignment_[ui] != -1) continue;
            Money cheapest = kInfinity;
            for (const Candidate& cand : ix_.user_cand[ui]) {
                if (ports_left_[cand.target] > 0) cheapest = std::min(cheapest, cand.cost);
            }
            if (cheapest == kInfinity) return kInfinity;
            bound += cheapest;
        }
        return bound;
    }

    void settle_leaf(Money committed) {
        std::vector<int> open;
        for (int ai = 0; ai < static_cast<int>(ix_.access.size()); ++ai) {
            if (users_on_[ai] > 0) open.push_back(ai);
        }
        const Stage2Result& stage2 = stage2_.solve(open);
        if (!stage2.feasible) return;
        Money total = committed + stage2.cost + inst_.core.cost;
        if (has_incumbent_ &&
            (total > best_cost_ || (total == best_cost_ && assignment_ >= best_assignment_))) {
            return;
        }
        has_incumbent_ = true;
        best_cost_ = total;
        best_assignment_ = assignment_;
        best_open_ = open;
        best_dist_for_open_ = stage2.dist_for_open;
    }

    const NetworkInstance& inst_;
    const Index& ix_;
    const SolveLimits& limits_;
    Stage2Solver stage2_;

    std::vector<int> assignment_;
    std::vector<int> ports_left_;
    std::vector<int> users_on_;
    std::size_t unassigned_ = 0;

    bool has_incumbent_ = false;
    Money best_cost_ = kInfinity;
    std::vector<int> best_assignment_;
    std::vector<int> best_open_;
    std::vector<int> best_dist_for_open_;

    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

std::size_t IlpModel::family_count(std::string_view family) const {
    std::size_t count = 0;
    for (const auto& c : constraints) count += c.family == family;
    return count;
}

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::feasible_not_proven: return "feasible_not_proven";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::unknown: return "unknown";
    }
    return "unknown";
}

IlpModel build_ilp(const NetworkInstance& inst) {
    Index ix = build_index(inst);
    IlpModel model;

    // Variables in blocks: w, then x, then y, then z.
    for (std::size_t ui = 0; ui < ix.users.size(); ++ui) {
        for (const Candidate& cand : ix.user_cand[ui]) {
            model.w_index[{ix.users[ui]->id, ix.access[cand.target]->id}] =
                model.variable_count();
            model.objective.push_back(cand.cost);
        }
    }
    for (const auto* a : ix.access) {
        model.x_index[a->id] = model.variable_count();
        model.objective.push_back(a->cost);
    }
    for (std::size_t ai = 0; ai < ix.access.size(); ++ai) {
        for (const Candidate& cand : ix.access_cand[ai]) {
            model.y_index[{ix.access[ai]->id, ix.dist[cand.target]->id}] = model.variable_count();
            model.objective.push_back(cand.cost);
        }
    }
    for (std::size_t di = 0; di < ix.dist.size(); ++di) {
        model.z_index[ix.dist[di]->id] = model.variable_count();
        model.objective.push_back(ix.dist_cost[di] == kInfinity ? 0 : ix.dist_cost[di]);
    }
    model.constant_cost = inst.core.cost;

    // One equality per user: exactly one same-profile access switch.
    for (std::size_t ui = 0; ui < ix.users.size(); ++ui) {
        IlpConstraint c;
        c.family = "assign_user";
        c.subject = ix.users[ui]->id;
        for (const Candidate& cand : ix.user_cand[ui]) {
            c.terms.push_back({model.w_index.at({ix.users[ui]->id, ix.access[cand.target]->id}), 1});
        }
        c.rel = Relation::eq;
        c.rhs = 1;
        model.constraints.push_back(std::move(c));
    }
    // Port bound per access switch.
    for (const auto* a : ix.access) {
        IlpConstraint c;
        c.family = "access_capacity";
        c.subject = a->id;
        for (const auto& [key, var] : model.w_index) {
            if (key.second == a->id) c.terms.push_back({var, 1});
        }
        c.rel = Relation::le;
        c.rhs = a->max_users;
        model.constraints.push_back(std::move(c));
    }
    // A user edge is possible only on an installed switch: w <= x.
    for (const auto& [key, var] : model.w_index) {
        IlpConstraint c;
        c.family = "edge_requires_open_access";
        c.subject = key.first + "->" + key.second;
        c.terms.push_back({var, 1});
        c.terms.push_back({model.x_index.at(key.second), -1});
        c.rel = Relation::le;
        c.rhs = 0;
        model.constraints.push_back(std::move(c));
    }
    // One equality per access switch: sum of its uplinks equals x.
    for (std::size_t ai = 0; ai < ix.access.size(); ++ai) {
        IlpConstraint c;
        c.family = "access_uplink";
        c.subject = ix.access[ai]->id;
        for (const Candidate& cand : ix.access_cand[ai]) {
            c.terms.push_back({model.y_index.at({ix.access[ai]->id, ix.dist[cand.target]->id}), 1});
        }
        c.terms.push_back({model.x_index.at(ix.access[ai]->id), -1});
        c.rel = Relation::eq;
        c.rhs = 0;
        model.constraints.push_back(std::move(c));
    }
    // Degree bound per distribution switch.
    for (const auto* d : ix.dist) {
        IlpConstraint c;
        c.family = "distribution_degree";
        c.subject = d->id;
        for (const auto& [key, var] : model.y_index) {
            if (key.second == d->id) c.terms.push_back({var, 1});
        }
        c.rel = Relation::le;
        c.rhs = d->max_access;
        model.constraints.push_back(std::move(c));
    }
    // An uplink is possible only onto an installed distribution switch: y <= z.
    for (const auto& [key, var] : model.y_index) {
        IlpConstraint c;
        c.family = "edge_requires_open_distribution";
        c.subject = key.first + "->" + key.second;
        c.terms.push_back({var, 1});
        c.terms.push_back({model.z_index.at(key.second), -1});
        c.rel = Relation::le;
        c.rhs = 0;
        model.constraints.push_back(std::move(c));
    }

    return model;
}

SolveResult solve_exact(const NetworkInstance& inst, const SolveLimits& limits) {
    Index ix = build_index(inst);
    return BranchAndBound(inst, ix, limits).run();
}

SolveResult brute_force(const NetworkInstance& inst) {
    if (inst.users.size() > 8 || inst.access_switches.size() > 4 ||
        inst.distribution_switches.size() > 3) {
        throw Error("instance_too_large",
                    "brute force refuses instances beyond 8 users, 4 access switches, "
                    "3 distribution switches");
    }
    Index ix = build_index(inst);
    SolveResult result;

    const std::size_t n_users = ix.users.size();
    for (std::size_t ui = 0; ui < n_users; ++ui) {
        if (ix.user_cand[ui].empty()) {
            result.status = SolveStatus::infeasible;
            return result;
        }
    }

    bool found = false;
    Money best_cost = kInfinity;
    std::vector<int> best_user_choice, best_open, best_dist_for_open;

    // Odometer over user choices, last position fastest: ascending
    // lexicographic order over (sorted user id -> access id), so the first
    // solution seen at the optimal cost is the tie-break winner.
    std::vector<std::size_t> choice(n_users, 0);
    while (true) {
        ++result.explored_nodes;

        std::vector<int> users_on(ix.access.size(), 0);
        bool capacity_ok = true;
        Money user_stage = 0;
        for (std::size_t ui = 0; ui < n_users; ++ui) {
            const Candidate& cand = ix.user_cand[ui][choice[ui]];
            users_on[cand.target] += 1;
            if (users_on[cand.target] > ix.access_ports[cand.target]) {
                capacity_ok = false;
                break;
            }
            user_stage += cand.cost;
        }

        if (capacity_ok) {
            std::vector<int> open;
            for (int ai = 0; ai < static_cast<int>(ix.access.size()); ++ai) {
                if (users_on[ai] > 0) {
                    open.push_back(ai);
                    user_stage += ix.access_cost[ai];
                }
            }

            // Inner odometer over uplink choices for the open switches.
            bool open_feasible = std::all_of(open.begin(), open.end(), [&](int ai) {
                return !ix.access_cand[ai].empty();
            });
            if (open_feasible) {
                std::vector<std::size_t> uplink(open.size(), 0);
                while (true) {
                    std::vector<int> dist_uses(ix.dist.size(), 0);
                    bool degree_ok = true;
                    Money total = user_stage + inst.core.cost;
                    for (std::size_t i = 0; i < open.size(); ++i) {
                        const Candidate& cand = ix.access_cand[open[i]][uplink[i]];
                        dist_uses[cand.target] += 1;
                        if (dist_uses[cand.target] > ix.dist_ports[cand.target]) {
                            degree_ok = false;
                            break;
                        }
                        total += cand.cost;
                        if (dist_uses[cand.target] == 1) total += ix.dist_cost[cand.target];
                    }
                    if (degree_ok && (!found || total < best_cost)) {
                        found = true;
                        best_cost = total;
                        best_user_choice.assign(n_users, 0);
                        for (std::size_t ui = 0; ui < n_users; ++ui) {
                            best_user_choice[ui] = ix.user_cand[ui][choice[ui]].target;
                        }
                        best_open = open;
                        best_dist_for_open.assign(open.size(), 0);
                        for (std::size_t i = 0; i < open.size(); ++i) {
                            best_dist_for_open[i] = ix.access_cand[open[i]][uplink[i]].target;
                        }
                    }

                    std::size_t pos = open.size();
                    while (pos > 0) {
                        --pos;
                        if (++uplink[pos] < ix.access_cand[open[pos]].size()) break;
                        uplink[pos] = 0;
                        if (pos == 0) goto uplinks_done;
                    }
                    if (open.empty()) break;
                }
            uplinks_done:;
            }
        }

        std::size_t pos = n_users;
        while (pos > 0) {
            --pos;
            if (++choice[pos] < ix.user_cand[pos].size()) break;
            choice[pos] = 0;
            if (pos == 0) goto users_done;
        }
        if (n_users == 0) break;
    }
users_done:

    if (!found) {
        result.status = SolveStatus::infeasible;
        return result;
    }
    result.status = SolveStatus::optimal;
    result.solution =
        assemble_solution(ix, best_user_choice, best_open, best_dist_for_open, best_cost);
    return result;
}

ValidationReport check_solution(const NetworkInstance& inst, const DesignSolution& sol) {
    ValidationReport report;

    for (const auto& id : sol.open_access) {
        if (!inst.find_access(id)) report.add("unknown_access", id, "open_access lists unknown id");
    }
    for (const auto& id : sol.open_distribution) {
        if (!inst.find_distribution(id)) {
            report.add("unknown_distribution", id, "open_distribution lists unknown id");
        }
    }

    std::map<std::string, int> users_per_access;
    for (const auto& u : inst.users) {
        auto it = sol.user_assignment.find(u.id);
        if (it == sol.user_assignment.end()) {
            report.add("user_not_assigned", u.id, "user has no access switch");
            continue;
        }
        const AccessSwitch* a = inst.find_access(it->second);
        if (!a) {
            report.add("unknown_access", u.id, "user assigned to unknown switch " + it->second);
            continue;
        }
        if (a->profile != u.profile) {
            report.add("cross_profile_assignment", u.id,
                       "user and switch " + a->id + " have different profiles");
        }
        if (!inst.user_access_links.count({u.id, a->id})) {
            report.add("no_candidate_link", u.id, "no link exists to switch " + a->id);
        }
        if (!sol.open_access.count(a->id)) {
            report.add("assigned_to_closed_access", u.id,
                       "assigned switch " + a->id + " is not open");
        }
        users_per_access[a->id] += 1;
    }
    for (const auto& [user_id, access_id] : sol.user_assignment) {
        if (!inst.find_user(user_id)) {
            report.add("unknown_user", user_id, "assignment names a user not in the instance");
        }
        (void)access_id;
    }
    for (const auto& [access_id, count] : users_per_access) {
        const AccessSwitch* a = inst.find_access(access_id);
        if (a && count > a->max_users) {
            report.add("access_capacity_exceeded", access_id,
                       std::to_string(count) + " users on a switch with " +
                           std::to_string(a->max_users) + " ports");
        }
    }

    std::map<std::string, int> access_per_dist;
    for (const auto& access_id : sol.open_access) {
        auto it = sol.access_assignment.find(access_id);
        if (it == sol.access_assignment.end()) {
            report.add("open_access_without_uplink", access_id,
                       "open access switch has no distribution switch");
            continue;
        }
        const DistributionSwitch* d = inst.find_distribution(it->second);
        if (!d) {
            report.add("unknown_distribution", access_id,
                       "uplinked to unknown switch " + it->second);
            continue;
        }
        if (!inst.access_dist_links.count({access_id, d->id})) {
            report.add("no_uplink_link", access_id, "no link exists to switch " + d->id);
        }
        if (!sol.open_distribution.count(d->id)) {
            report.add("uplink_to_closed_distribution", access_id,
                       "uplinked switch " + d->id + " is not open");
        }
        access_per_dist[d->id] += 1;
    }
    for (const auto& [access_id, dist_id] : sol.access_assignment) {
        if (!sol.open_access.count(access_id)) {
            report.add("uplink_from_closed_access", access_id,
                       "closed access switch carries an uplink to " + dist_id);
        }
    }
    for (const auto& [dist_id, count] : access_per_dist) {
        const DistributionSwitch* d = inst.find_distribution(dist_id);
        if (d && count > d->max_access) {
            report.add("distribution_degree_exceeded", dist_id,
                       std::to_string(count) + " access switches on a switch with degree bound " +
                           std::to_string(d->max_access));
        }
    }
    for (const auto& dist_id : sol.open_distribution) {
        if (inst.find_distribution(dist_id) && !inst.dist_core_links.count(dist_id)) {
            report.add("missing_core_uplink", dist_id,
                       "open distribution switch has no link to the core");
        }
    }

    // Tree property by traversal: users, open switches and the core with the
    // assignment edges must form one connected component with |V|-1 edges.
    if (report.ok()) {
        std::map<std::string, std::vector<std::string>> adjacency;
        std::size_t node_count = 1 + inst.users.size() + sol.open_access.size() +
                                 sol.open_distribution.size();
        std::size_t edge_count = 0;
        auto add_edge = [&](const std::string& a, const std::string& b) {
            adjacency["n:" + a].push_back("n:" + b);
            adjacency["n:" + b].push_back("n:" + a);
            ++edge_count;
        };
        for (const auto& [user_id, access_id] : sol.user_assignment) {
            add_edge("u/" + user_id, "a/" + access_id);
        }
        for (const auto& [access_id, dist_id] : sol.access_assignment) {
            add_edge("a/" + access_id, "d/" + dist_id);
        }
        for (const auto& dist_id : sol.open_distribution) add_edge("d/" + dist_id, "core");

        std::set<std::string> visited;
        std::vector<std::string> frontier{"n:core"};
        visited.insert("n:core");
        while (!frontier.empty()) {
            std::string node = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& next : adjacency[node]) {
                if (visited.insert(next).second) frontier.push_back(next);
            }
        }
        if (visited.size() != node_count || edge_count != node_count - 1) {
            report.add("not_a_tree", "solution",
                       "induced subgraph has " + std::to_string(node_count) + " nodes, " +
                           std::to_string(edge_count) + " edges, " +
                           std::to_string(visited.size()) + " reachable from the core");
        }
    }

    // Recompute the establishment cost from scratch and demand exact equality.
    if (report.ok()) {
        Money cost = inst.core.cost;
        for (const auto& [user_id, access_id] : sol.user_assignment) {
            cost += inst.user_access_links.at({user_id, access_id}).cost;
        }
        for (const auto& access_id : sol.open_access) {
            cost += inst.find_access(access_id)->cost;
        }
        for (const auto& [access_id, dist_id] : sol.access_assignment) {
            cost += inst.access_dist_links.at({access_id, dist_id}).cost;
        }
        for (const auto& dist_id : sol.open_distribution) {
            cost += inst.find_distribution(dist_id)->cost + inst.dist_core_links.at(dist_id).cost;
        }
        if (cost != sol.total_cost) {
            report.add("cost_mismatch", "solution",
                       "recomputed cost " + money_to_string(cost) + " != stated " +
                           money_to_string(sol.total_cost));
        }
    }

    return report;
}

}  // namespace accessnet
