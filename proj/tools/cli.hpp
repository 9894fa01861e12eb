#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boilerplate {

/// Runs the `boilerplate` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on I/O failure and 2 on invalid configuration.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boilerplate
