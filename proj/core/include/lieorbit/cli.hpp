#ifndef LIEORBIT_CLI_HPP
#define LIEORBIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lieorbit::cli {

/// Runs the command-line interface. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`. Returns 0 on success, 1 on a
/// usage problem, 2 on an internal defect.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lieorbit::cli

#endif
