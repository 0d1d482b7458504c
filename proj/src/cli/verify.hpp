#pragma once

#include "sqk/fiber/curve.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace sqk::cli {

struct VerifyConfig {
  int n = 10;
  std::string fixtures_dir;
  // Fault injection: replaces the built-in V_0 with a fixture file.
  std::optional<std::string> v0_path;
};

// Runs the invariant battery; returns the report body ("checks" sorted by
// name, "all_passed"). Per-check timings are written to `timings`.
nlohmann::json verify_all(const VerifyConfig& cfg, std::ostream& timings);

}  // namespace sqk::cli
