#pragma once

#include <cstdint>

#include "accessnet/model.hpp"

namespace accessnet {

// Seeded random instance generator for property tests and the `gen`
// subcommand. Costs, lengths and port bounds are drawn uniformly from the
// closed ranges below; links are complete within each building (every user to
// every access switch there, every access switch to every distribution switch
// there). Profiles and port bounds are repaired so each building can serve its
// own users' profiles, which keeps generated instances valid; distribution
// degree bounds stay random, so infeasible instances still occur.
struct GenConfig {
    std::uint64_t seed = 1;
    int users = 6;
    int access = 3;
    int dist = 2;
    int buildings = 1;
    double office_fraction = 0.5;

    Money access_cost_min = 500, access_cost_max = 20'000;
    Money dist_cost_min = 2'000, dist_cost_max = 50'000;
    Money link_cost_min = 100, link_cost_max = 5'000;
    Money core_cost = 0;
    int length_min_m = 1, length_max_m = 120;

    // 0 means "derive": access ports from [1, users], distribution ports from
    // [1, access].
    int access_ports_min = 1, access_ports_max = 0;
    int dist_ports_min = 1, dist_ports_max = 0;

    // Price user links from their lengths at the copper rate instead of an
    // independent uniform draw.
    bool cost_from_length = false;
};

NetworkInstance generate_instance(const GenConfig& cfg);

}  // namespace accessnet
