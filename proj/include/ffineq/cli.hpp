#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffineq {

// Parses CLI arguments (without the program name), runs the requested
// command and writes the report. Exit codes: 0 all cells clean, 1 at
// least one finding, 2 usage/config error. Resource skips alone leave 0.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ffineq
