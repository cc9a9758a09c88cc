#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace accessnet {

// Entry point behind the `accessnet` binary. `args` excludes the program
// name. Returns 0 on success, 1 on domain errors (reported as a JSON error
// object on the output stream), 2 on usage or input-parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accessnet
