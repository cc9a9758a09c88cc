#include "accessnet/model.hpp"

#include <cmath>
#include <set>

#include "accessnet/errors.hpp"

namespace accessnet {

const char* to_string(Profile profile) {
    return profile == Profile::office ? "office" : "always_on";
}

const char* to_string(Medium medium) { return medium == Medium::copper ? "copper" : "fiber"; }

std::optional<Profile> profile_from_string(std::string_view text) {
    if (text == "office") return Profile::office;
    if (text == "always_on") return Profile::always_on;
    return std::nullopt;
}

std::optional<Medium> medium_from_string(std::string_view text) {
    if (text == "copper") return Medium::copper;
    if (text == "fiber") return Medium::fiber;
    return std::nullopt;
}

CableRateTable CableRateTable::bundled_default() {
    CableRateTable table;
    table.per_meter[Medium::copper] = 1500;  // 15.00 per meter
    return table;
}

const User* NetworkInstance::find_user(std::string_view id) const {
    for (const auto& u : users) {
        if (u.id == id) return &u;
    }
    return nullptr;
}

const AccessSwitch* NetworkInstance::find_access(std::string_view id) const {
    for (const auto& a : access_switches) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

const DistributionSwitch* NetworkInstance::find_distribution(std::string_view id) const {
    for (const auto& d : distribution_switches) {
        if (d.id == id) return &d;
    }
    return nullptr;
}

namespace {

void check_link(ValidationReport& report, const std::string& subject, const Link& link) {
    if (link.length_m < 0) {
        report.add("negative_length", subject, "link length must be >= 0");
    }
    if (link.cost < 0) {
        report.add("negative_cost", subject, "link cost must be >= 0");
    }
    if (link.capacity_bps <= 0) {
        report.add("nonpositive_capacity", subject, "link capacity must be > 0");
    }
}

std::string link_subject(const LinkKey& key) { return key.first + "->" + key.second; }

}  // namespace

ValidationReport validate_instance(const NetworkInstance& inst) {
    ValidationReport report;

    std::set<std::string> user_ids, access_ids, dist_ids;
    for (const auto& u : inst.users) {
        if (!user_ids.insert(u.id).second) {
            report.add("duplicate_id", u.id, "user id appears more than once");
        }
        if (u.building.empty()) {
            report.add("missing_building", u.id, "user has no building id");
        }
    }
    for (const auto& a : inst.access_switches) {
        if (!access_ids.insert(a.id).second) {
            report.add("duplicate_id", a.id, "access switch id appears more than once");
        }
        if (a.building.empty()) {
            report.add("missing_building", a.id, "access switch has no building id");
        }
        if (a.max_users < 1) {
            report.add("nonpositive_ports", a.id, "access switch must accept at least one user");
        }
        if (a.cost < 0) {
            report.add("negative_cost", a.id, "access switch cost must be >= 0");
        }
        if (a.power_w < 0) {
            report.add("negative_power", a.id, "access switch power must be >= 0");
        }
        if (!a.indoor) {
            report.warn("outdoor_site", a.id,
                        "switch site is not protected from outside temperature");
        }
    }
    for (const auto& d : inst.distribution_switches) {
        if (!dist_ids.insert(d.id).second) {
            report.add("duplicate_id", d.id, "distribution switch id appears more than once");
        }
        if (d.building.empty()) {
            report.add("missing_building", d.id, "distribution switch has no building id");
        }
        if (d.max_access < 1) {
            report.add("nonpositive_ports", d.id,
                       "distribution switch must accept at least one access switch");
        }
        if (d.cost < 0) {
            report.add("negative_cost", d.id, "distribution switch cost must be >= 0");
        }
        if (d.power_w < 0) {
            report.add("negative_power", d.id, "distribution switch power must be >= 0");
        }
        if (!inst.dist_core_links.count(d.id)) {
            report.add("missing_core_uplink", d.id,
                       "distribution switch has no link to the core switch");
        }
    }
    if (inst.core.cost < 0) {
        report.add("negative_cost", "core", "core switch cost must be >= 0");
    }
    if (inst.core.power_w < 0) {
        report.add("negative_power", "core", "core switch power must be >= 0");
    }

    for (const auto& [key, link] : inst.user_access_links) {
        const std::string subject = link_subject(key);
        if (!user_ids.count(key.first)) {
            report.add("unknown_endpoint", subject, "link names an unknown user id");
        }
        if (!access_ids.count(key.second)) {
            report.add("unknown_endpoint", subject, "link names an unknown access switch id");
        }
        check_link(report, subject, link);
    }
    for (const auto& [key, link] : inst.access_dist_links) {
        const std::string subject = link_subject(key);
        if (!access_ids.count(key.first)) {
            report.add("unknown_endpoint", subject, "link names an unknown access switch id");
        }
        if (!dist_ids.count(key.second)) {
            report.add("unknown_endpoint", subject, "link names an unknown distribution switch id");
        }
        check_link(report, subject, link);
    }
    for (const auto& [id, link] : inst.dist_core_links) {
        const std::string subject = id + "->core";
        if (!dist_ids.count(id)) {
            report.add("unknown_endpoint", subject, "link names an unknown distribution switch id");
        }
        check_link(report, subject, link);
    }

    // Every user must have at least one candidate access switch of its own
    // profile; connection across profiles is never permitted.
    for (const auto& u : inst.users) {
        bool has_candidate = false;
        auto it = inst.user_access_links.lower_bound({u.id, ""});
        for (; it != inst.user_access_links.end() && it->first.first == u.id; ++it) {
            const AccessSwitch* a = inst.find_access(it->first.second);
            if (a && a->profile == u.profile) {
                has_candidate = true;
                break;
            }
        }
        if (!has_candidate) {
            report.add("no_same_profile_candidate", u.id,
                       "user has no candidate link to an access switch of its own profile");
        }
    }

    // Independent counting pass: total ports per profile must cover the users
    // of that profile, or no assignment can exist.
    for (Profile profile : {Profile::office, Profile::always_on}) {
        long long demand = 0, ports = 0;
        for (const auto& u : inst.users) {
            if (u.profile == profile) ++demand;
        }
        for (const auto& a : inst.access_switches) {
            if (a.profile == profile) ports += a.max_users;
        }
        if (demand > ports) {
            report.add("insufficient_profile_capacity", to_string(profile),
                       "users of this profile outnumber the ports on its access switches (" +
                           std::to_string(demand) + " users, " + std::to_string(ports) +
                           " ports)");
        }
    }

    return report;
}

Money link_cost_from_length(double length_m, Medium medium, const CableRateTable& rates) {
    auto it = rates.per_meter.find(medium);
    if (it == rates.per_meter.end()) {
        throw Error("unknown_medium",
                    std::string("no cable rate configured for medium '") + to_string(medium) + "'");
    }
    return static_cast<Money>(std::llround(length_m * static_cast<double>(it->second)));
}

}  // namespace accessnet
