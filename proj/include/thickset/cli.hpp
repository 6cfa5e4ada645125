#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thickset {

/// Runs one CLI invocation (args without the program name). Exit status 0 on
/// success, 1 on a domain error (the error name is printed), 2 on malformed
/// input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thickset
