#include "accessnet/topology_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "accessnet/errors.hpp"

namespace accessnet {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw ParseError("bad_topology", message); }

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) bad(where + ": missing field '" + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) bad(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

double require_number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) bad(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

Money money_field(const json& v, const std::string& where) {
    if (v.is_number()) return money_from_major(v.get<double>());
    if (v.is_string()) {
        auto parsed = money_from_string(v.get<std::string>());
        if (parsed) return *parsed;
    }
    bad(where + ": expected a money amount (number or decimal string)");
}

Money require_money(const json& obj, const char* key, const std::string& where) {
    return money_field(require(obj, key, where), where + "." + key);
}

Profile require_profile(const json& obj, const std::string& where) {
    auto profile = profile_from_string(require_string(obj, "profile", where));
    if (!profile) bad(where + ": profile must be 'office' or 'always_on'");
    return *profile;
}

struct TierDefaults {
    Medium medium;
    double capacity_bps;
};

// Media and capacities per tier follow the usual campus wiring plan:
// copper at 100 Mbps to users, copper at 1 Gbps to distribution, fiber at
// 1 Gbps to the core.
constexpr TierDefaults kUserAccess{Medium::copper, 100e6};
constexpr TierDefaults kAccessDist{Medium::copper, 1e9};
constexpr TierDefaults kDistCore{Medium::fiber, 1e9};

Link parse_link(const json& obj, const TierDefaults& defaults, const CableRateTable& rates,
                const std::string& where) {
    Link link;
    link.medium = defaults.medium;
    if (obj.contains("medium")) {
        auto medium = medium_from_string(require_string(obj, "medium", where));
        if (!medium) bad(where + ": medium must be 'copper' or 'fiber'");
        link.medium = *medium;
    }
    link.length_m = obj.contains("length_m") ? require_number(obj, "length_m", where) : 0.0;
    link.capacity_bps = obj.contains("capacity_bps") ? require_number(obj, "capacity_bps", where)
                                                     : defaults.capacity_bps;
    if (obj.contains("cost")) {
        link.cost = require_money(obj, "cost", where);
    } else {
        if (!rates.per_meter.count(link.medium)) {
            bad(where + ": link has no cost and no rate is configured for medium '" +
                std::string(to_string(link.medium)) + "'");
        }
        link.cost = link_cost_from_length(link.length_m, link.medium, rates);
    }
    return link;
}

json link_to_json(const std::string& from, const std::string& to, const Link& link) {
    json obj;
    obj["from"] = from;
    obj["to"] = to;
    obj["cost"] = money_to_major(link.cost);
    obj["length_m"] = link.length_m;
    obj["capacity_bps"] = link.capacity_bps;
    obj["medium"] = to_string(link.medium);
    return obj;
}

}  // namespace

NetworkInstance load_topology(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("top level must be an object");

    NetworkInstance inst;

    if (doc.contains("rates")) {
        const json& rates = doc["rates"];
        if (!rates.is_object()) bad("rates must be an object");
        inst.rates.per_meter.clear();
        for (const auto& [key, value] : rates.items()) {
            auto medium = medium_from_string(key);
            if (!medium) bad("rates: unknown medium '" + key + "'");
            Money rate = money_field(value, "rates." + key);
            if (rate <= 0) bad("rates." + key + ": rate must be > 0");
            inst.rates.per_meter[*medium] = rate;
        }
    }

    for (const json& u : require(doc, "users", "topology")) {
        User user;
        user.id = require_string(u, "id", "user");
        user.building = require_string(u, "building", "user " + user.id);
        user.profile = require_profile(u, "user " + user.id);
        inst.users.push_back(std::move(user));
    }

    for (const json& a : require(doc, "access_switches", "topology")) {
        AccessSwitch sw;
        sw.id = require_string(a, "id", "access switch");
        const std::string where = "access switch " + sw.id;
        sw.building = require_string(a, "building", where);
        sw.profile = require_profile(a, where);
        sw.cost = require_money(a, "cost", where);
        sw.power_w = require_number(a, "power_w", where);
        sw.max_users = static_cast<int>(require_number(a, "max_users", where));
        if (a.contains("indoor")) {
            if (!a["indoor"].is_boolean()) bad(where + ": indoor must be a boolean");
            sw.indoor = a["indoor"].get<bool>();
        }
        inst.access_switches.push_back(std::move(sw));
    }

    for (const json& d : require(doc, "distribution_switches", "topology")) {
        DistributionSwitch sw;
        sw.id = require_string(d, "id", "distribution switch");
        const std::string where = "distribution switch " + sw.id;
        sw.building = require_string(d, "building", where);
        sw.cost = require_money(d, "cost", where);
        sw.power_w = require_number(d, "power_w", where);
        sw.max_access = static_cast<int>(require_number(d, "max_access", where));
        inst.distribution_switches.push_back(std::move(sw));
    }

    const json& core = require(doc, "core", "topology");
    inst.core.cost = require_money(core, "cost", "core");
    inst.core.power_w = require_number(core, "power_w", "core");

    std::set<std::string> user_ids, access_ids, dist_ids;
    for (const auto& u : inst.users) user_ids.insert(u.id);
    for (const auto& a : inst.access_switches) access_ids.insert(a.id);
    for (const auto& d : inst.distribution_switches) dist_ids.insert(d.id);

    for (const json& l : require(doc, "links", "topology")) {
        const std::string from = require_string(l, "from", "link");
        const std::string to = require_string(l, "to", "link");
        const std::string where = "link " + from + "->" + to;
        if (user_ids.count(from)) {
            if (!access_ids.count(to)) bad(where + ": user links must end at an access switch");
            if (!inst.user_access_links.emplace(LinkKey{from, to},
                                                parse_link(l, kUserAccess, inst.rates, where))
                     .second) {
                bad(where + ": duplicate link");
            }
        } else if (access_ids.count(from)) {
            if (!dist_ids.count(to)) {
                bad(where + ": access switch links must end at a distribution switch");
            }
            if (!inst.access_dist_links.emplace(LinkKey{from, to},
                                                parse_link(l, kAccessDist, inst.rates, where))
                     .second) {
                bad(where + ": duplicate link");
            }
        } else if (dist_ids.count(from)) {
            if (to != "core") bad(where + ": distribution switch links must end at 'core'");
            if (!inst.dist_core_links.emplace(from, parse_link(l, kDistCore, inst.rates, where))
                     .second) {
                bad(where + ": duplicate link");
            }
        } else {
            bad(where + ": 'from' matches no user, access switch or distribution switch");
        }
    }

    return inst;
}

NetworkInstance load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("missing_file", "cannot open topology file: " + path);
    return load_topology(in);
}

void save_topology(const NetworkInstance& inst, std::ostream& out) {
    json doc;
    doc["users"] = json::array();
    for (const auto& u : inst.users) {
        doc["users"].push_back({{"id", u.id}, {"building", u.building},
                                {"profile", to_string(u.profile)}});
    }
    doc["access_switches"] = json::array();
    for (const auto& a : inst.access_switches) {
        json obj{{"id", a.id},           {"building", a.building},
                 {"profile", to_string(a.profile)}, {"cost", money_to_major(a.cost)},
                 {"power_w", a.power_w}, {"max_users", a.max_users}};
        if (!a.indoor) obj["indoor"] = false;
        doc["access_switches"].push_back(std::move(obj));
    }
    doc["distribution_switches"] = json::array();
    for (const auto& d : inst.distribution_switches) {
        doc["distribution_switches"].push_back({{"id", d.id},
                                                {"building", d.building},
                                                {"cost", money_to_major(d.cost)},
                                                {"power_w", d.power_w},
                                                {"max_access", d.max_access}});
    }
    doc["core"] = {{"cost", money_to_major(inst.core.cost)}, {"power_w", inst.core.power_w}};

    json rates = json::object();
    for (const auto& [medium, rate] : inst.rates.per_meter) {
        rates[to_string(medium)] = money_to_major(rate);
    }
    doc["rates"] = std::move(rates);

    json links = json::array();
    for (const auto& [key, link] : inst.user_access_links) {
        links.push_back(link_to_json(key.first, key.second, link));
    }
    for (const auto& [key, link] : inst.access_dist_links) {
        links.push_back(link_to_json(key.first, key.second, link));
    }
    for (const auto& [id, link] : inst.dist_core_links) {
        links.push_back(link_to_json(id, "core", link));
    }
    doc["links"] = std::move(links);

    out << doc.dump(2) << '\n';
}

void save_topology_file(const NetworkInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("io_error", "cannot write topology file: " + path);
    save_topology(inst, out);
}

}  // namespace accessnet
