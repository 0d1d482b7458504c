#pragma once

#include "sqk/fiber/curve.hpp"

#include <json.hpp>

#include <vector>

namespace sqk::fiber {

struct CutComponent {
  int euler_char = 0;
  int boundary_count = 0;
  friend auto operator<=>(const CutComponent&, const CutComponent&) = default;
};

struct CutSurface {
  // Sorted by (euler_char, boundary_count).
  std::vector<CutComponent> components;
  int total_euler() const;
  nlohmann::json to_json() const;
};

// Complement of a family of pairwise disjoint simple closed curves. Throws
// NotEmbedded when the curves intersect (their coordinate sum is not an
// embedded multicurve with the given components).
CutSurface cut_along(const std::vector<NormalMultiCurve>& curves);

}  // namespace sqk::fiber
