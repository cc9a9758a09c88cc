#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "accessnet/money.hpp"

namespace accessnet {

// Domain types for a three-tier access network: users at the edge, access
// switches, distribution switches, one core switch. Everything is immutable
// after construction and safe to share read-only across workers.

enum class Profile { office, always_on };
enum class Medium { copper, fiber };

const char* to_string(Profile profile);
const char* to_string(Medium medium);
std::optional<Profile> profile_from_string(std::string_view text);
std::optional<Medium> medium_from_string(std::string_view text);

struct User {
    std::string id;
    std::string building;
    Profile profile = Profile::office;

    friend bool operator==(const User&, const User&) = default;
};

struct AccessSwitch {
    std::string id;
    std::string building;
    Profile profile = Profile::office;
    Money cost = 0;      // one-time establishment cost
    double power_w = 0;  // draw while powered, state-independent
    int max_users = 1;   // port bound
    bool indoor = true;  // site annotation only; never priced, warned on validation

    friend bool operator==(const AccessSwitch&, const AccessSwitch&) = default;
};

struct DistributionSwitch {
    std::string id;
    std::string building;
    Money cost = 0;
    double power_w = 0;
    int max_access = 1;  // degree bound on attached access switches

    friend bool operator==(const DistributionSwitch&, const DistributionSwitch&) = default;
};

// Exactly one core switch; it accommodates any number of distribution
// switches, so it carries no degree bound.
struct CoreSwitch {
    Money cost = 0;
    double power_w = 0;

    friend bool operator==(const CoreSwitch&, const CoreSwitch&) = default;
};

struct Link {
    Money cost = 0;
    double length_m = 0;
    double capacity_bps = 0;  // carried through reports, constrained nowhere
    Medium medium = Medium::copper;

    friend bool operator==(const Link&, const Link&) = default;
};

// Per-meter cable rates. Media without an entry are rejected by
// link_cost_from_length rather than guessed at.
struct CableRateTable {
    std::map<Medium, Money> per_meter;

    // Copper at 15.00 per meter.
    static CableRateTable bundled_default();

    friend bool operator==(const CableRateTable&, const CableRateTable&) = default;
};

using LinkKey = std::pair<std::string, std::string>;

// An absent link means the connection is not permitted; validation requires
// at least one same-profile candidate per user.
struct NetworkInstance {
    std::vector<User> users;
    std::vector<AccessSwitch> access_switches;
    std::vector<DistributionSwitch> distribution_switches;
    CoreSwitch core;
    std::map<LinkKey, Link> user_access_links;  // (user id, access id)
    std::map<LinkKey, Link> access_dist_links;  // (access id, distribution id)
    std::map<std::string, Link> dist_core_links;
    CableRateTable rates = CableRateTable::bundled_default();

    const User* find_user(std::string_view id) const;
    const AccessSwitch* find_access(std::string_view id) const;
    const DistributionSwitch* find_distribution(std::string_view id) const;

    friend bool operator==(const NetworkInstance&, const NetworkInstance&) = default;
};

struct Violation {
    std::string code;
    std::string subject;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool ok() const { return violations.empty(); }
    void add(std::string code, std::string subject, std::string detail) {
        violations.push_back({std::move(code), std::move(subject), std::move(detail)});
    }
    void warn(std::string code, std::string subject, std::string detail) {
        warnings.push_back({std::move(code), std::move(subject), std::move(detail)});
    }
};

// Lists every violated invariant with the offending id; side-effect free, so
// repeated calls yield identical reports. Downstream modules accept an
// instance only if the violation list is empty (warnings do not block).
ValidationReport validate_instance(const NetworkInstance& inst);

// length * rate(medium), exact on minor currency units. Throws
// Error("unknown_medium") when the table has no rate for the medium.
Money link_cost_from_length(double length_m, Medium medium, const CableRateTable& rates);

}  // namespace accessnet
