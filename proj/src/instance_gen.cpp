#include "accessnet/instance_gen.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "accessnet/errors.hpp"

namespace accessnet {

namespace {

std::string padded(const char* prefix, int n) {
    std::string digits = std::to_string(n);
    while (digits.size() < 3) digits.insert(digits.begin(), '0');
    return prefix + digits;
}

}  // namespace

NetworkInstance generate_instance(const GenConfig& cfg) {
    if (cfg.users < 0 || cfg.access < 1 || cfg.dist < 1 || cfg.buildings < 1) {
        throw Error("bad_argument",
                    "generator needs at least one access switch, distribution switch and building");
    }

    std::mt19937_64 rng(cfg.seed);
    auto draw_int = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng);
    };
    auto draw_money = [&rng](Money lo, Money hi) {
        return std::uniform_int_distribution<Money>(lo, std::max(lo, hi))(rng);
    };

    NetworkInstance inst;
    inst.core = {cfg.core_cost, 100.0};

    std::vector<std::string> buildings;
    for (int b = 0; b < cfg.buildings; ++b) buildings.push_back(padded("B", b + 1));

    for (int i = 0; i < cfg.users; ++i) {
        User u;
        u.id = padded("u", i + 1);
        u.building = buildings[static_cast<std::size_t>(draw_int(0, cfg.buildings - 1))];
        u.profile = std::uniform_real_distribution<double>(0, 1)(rng) < cfg.office_fraction
                        ? Profile::office
                        : Profile::always_on;
        inst.users.push_back(std::move(u));
    }

    // Spread switches round-robin over the buildings that actually hold users,
    // falling back to all buildings when there are no users.
    std::vector<std::string> populated;
    for (const auto& b : buildings) {
        for (const auto& u : inst.users) {
            if (u.building == b) {
                populated.push_back(b);
                break;
            }
        }
    }
    if (populated.empty()) populated = buildings;

    const int max_access_ports = cfg.access_ports_max > 0 ? cfg.access_ports_max
                                                          : std::max(1, cfg.users);
    for (int i = 0; i < cfg.access; ++i) {
        AccessSwitch a;
        a.id = padded("a", i + 1);
        a.building = populated[static_cast<std::size_t>(i) % populated.size()];
        a.profile = draw_int(0, 1) == 0 ? Profile::office : Profile::always_on;
        a.cost = draw_money(cfg.access_cost_min, cfg.access_cost_max);
        a.power_w = 50.0;
        a.max_users = draw_int(cfg.access_ports_min, max_access_ports);
        inst.access_switches.push_back(std::move(a));
    }

    const int max_dist_ports = cfg.dist_ports_max > 0 ? cfg.dist_ports_max
                                                      : std::max(1, cfg.access);
    for (int i = 0; i < cfg.dist; ++i) {
        DistributionSwitch d;
        d.id = padded("d", i + 1);
        d.building = populated[static_cast<std::size_t>(i) % populated.size()];
        d.cost = draw_money(cfg.dist_cost_min, cfg.dist_cost_max);
        d.power_w = 80.0;
        d.max_access = draw_int(cfg.dist_ports_min, max_dist_ports);
        inst.distribution_switches.push_back(std::move(d));
    }

    // Repair pass: every building must be able to serve the profiles of its
    // own users, and per-profile ports must cover per-profile demand.
    for (const auto& b : buildings) {
        std::map<Profile, int> demand;
        for (const auto& u : inst.users) {
            if (u.building == b) demand[u.profile] += 1;
        }
        if (demand.empty()) continue;

        std::vector<AccessSwitch*> local;
        for (auto& a : inst.access_switches) {
            if (a.building == b) local.push_back(&a);
        }
        if (local.empty()) {
            // Steal a switch from the best-stocked building.
            std::map<std::string, int> stock;
            for (const auto& a : inst.access_switches) stock[a.building] += 1;
            AccessSwitch* moved = nullptr;
            for (auto& a : inst.access_switches) {
                if (stock[a.building] > 1 && (!moved || stock[a.building] > stock[moved->building])) {
                    moved = &a;
                }
            }
            if (!moved) moved = &inst.access_switches.front();
            moved->building = b;
            local.push_back(moved);
        }
        std::size_t flip = 0;
        for (const auto& [profile, count] : demand) {
            bool present = false;
            for (const auto* a : local) present |= a->profile == profile;
            if (!present) local[flip++ % local.size()]->profile = profile;
        }
        for (const auto& [profile, count] : demand) {
            int ports = 0;
            for (const auto* a : local) {
                if (a->profile == profile) ports += a->max_users;
            }
            for (auto* a : local) {
                if (ports >= count) break;
                if (a->profile == profile) {
                    ports += count - a->max_users;
                    a->max_users = count;
                }
            }
        }

        bool has_dist = false;
        for (const auto& d : inst.distribution_switches) has_dist |= d.building == b;
        if (!has_dist) {
            std::map<std::string, int> stock;
            for (const auto& d : inst.distribution_switches) stock[d.building] += 1;
            DistributionSwitch* moved = &inst.distribution_switches.front();
            for (auto& d : inst.distribution_switches) {
                if (stock[d.building] > stock[moved->building]) moved = &d;
            }
            moved->building = b;
        }
    }

    for (const auto& u : inst.users) {
        for (const auto& a : inst.access_switches) {
            if (a.building != u.building) continue;
            Link link;
            link.length_m = draw_int(cfg.length_min_m, cfg.length_max_m);
            link.capacity_bps = 100e6;
            link.medium = Medium::copper;
            link.cost = cfg.cost_from_length
                            ? link_cost_from_length(link.length_m, Medium::copper, inst.rates)
                            : draw_money(cfg.link_cost_min, cfg.link_cost_max);
            inst.user_access_links[{u.id, a.id}] = link;
        }
    }
    for (const auto& a : inst.access_switches) {
        for (const auto& d : inst.distribution_switches) {
            if (d.building != a.building) continue;
            Link link;
            link.length_m = draw_int(cfg.length_min_m, cfg.length_max_m);
            link.capacity_bps = 1e9;
            link.medium = Medium::copper;
            link.cost = draw_money(cfg.link_cost_min, cfg.link_cost_max);
            inst.access_dist_links[{a.id, d.id}] = link;
        }
    }
    for (const auto& d : inst.distribution_switches) {
        Link link;
        link.length_m = draw_int(cfg.length_min_m, 10 * cfg.length_max_m);
        link.capacity_bps = 1e9;
        link.medium = Medium::fiber;
        link.cost = draw_money(cfg.link_cost_min, cfg.link_cost_max);
        inst.dist_core_links[d.id] = link;
    }

    return inst;
}

}  // namespace accessnet
