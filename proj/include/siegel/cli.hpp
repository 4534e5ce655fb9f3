#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace siegel {

/// Runs the siegel-dims command line. `args` excludes the program name.
/// Returns 0 on success, 1 on usage or domain errors (and failed
/// verification), 2 on an internal integrity failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace siegel
