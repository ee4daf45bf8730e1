#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucasforge {

// Parses argv-style arguments (program name excluded), runs the requested
// command, and writes the report to `out` and diagnostics to `err`.
// Exit codes: 0 success (including expected-negative matches), 1 any
// unexpected verdict, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucasforge
