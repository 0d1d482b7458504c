#pragma once

#include <stdexcept>
#include <string>

namespace sqk {

// Base class for every domain failure raised by the toolkit. `kind()` is a
// stable machine-readable tag used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& what) : Error("invariant_violation", what) {}
};

struct SurfaceStructureError : Error {
  explicit SurfaceStructureError(const std::string& what) : Error("surface_structure", what) {}
};

struct NotReduced : Error {
  explicit NotReduced(const std::string& what) : Error("not_reduced", what) {}
};

struct NotLiftable : Error {
  explicit NotLiftable(const std::string& what) : Error("not_liftable", what) {}
};

struct NotEmbedded : Error {
  explicit NotEmbedded(const std::string& what) : Error("not_embedded", what) {}
};

struct StepCapExceeded : Error {
  explicit StepCapExceeded(const std::string& what) : Error("step_cap_exceeded", what) {}
};

struct UnbalancedJumps : Error {
  explicit UnbalancedJumps(const std::string& what) : Error("unbalanced_jumps", what) {}
};

}  // namespace sqk
