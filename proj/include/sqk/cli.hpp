#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqk::cli {

inline constexpr const char* kVersion = "0.1.0";

// Parses argv-style arguments (args[0] = program name), runs the command and
// writes the JSON report to `out` (or to --output). Diagnostics and timings
// go to `err`. Exit codes: 0 success, 1 domain error or failed check,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqk::cli
