#pragma once

#include <iosfwd>
#include <string>

#include "accessnet/model.hpp"

namespace accessnet {

// Topology files are JSON documents with arrays `users`, `access_switches`,
// `distribution_switches`, an object `core`, a flat `links` array (tier is
// inferred from the endpoints; the core endpoint is the reserved id "core"),
// and a `rates` object mapping medium to per-meter cost. Money is written in
// major units with at most two decimals. A link without a `cost` gets one
// synthesized from its length and medium rate.
NetworkInstance load_topology(std::istream& in);
NetworkInstance load_topology_file(const std::string& path);

void save_topology(const NetworkInstance& inst, std::ostream& out);
void save_topology_file(const NetworkInstance& inst, const std::string& path);

}  // namespace accessnet
