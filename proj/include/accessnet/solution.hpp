#pragma once

#include <map>
#include <set>
#include <string>

#include "accessnet/money.hpp"

namespace accessnet {

// A designed sub-network: every user wired to exactly one access switch of
// its own profile, every open access switch uplinked to one open distribution
// switch, every open distribution switch uplinked to the core. The induced
// graph is a tree rooted at the core.
struct DesignSolution {
    std::map<std::string, std::string> user_assignment;    // user id -> access id
    std::set<std::string> open_access;
    std::map<std::string, std::string> access_assignment;  // access id -> distribution id
    std::set<std::string> open_distribution;
    Money total_cost = 0;  // includes the always-paid core switch

    friend bool operator==(const DesignSolution&, const DesignSolution&) = default;
};

}  // namespace accessnet
