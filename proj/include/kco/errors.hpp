#pragma once

#include <stdexcept>
#include <string>

namespace kco {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHermitianInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a symmetric operator matrix does not come from a tensor
// satisfying the first Bianchi identity. `defect` is the l2 norm of the
// cyclic sums over a spanning set of index quadruples.
struct BianchiViolation : std::runtime_error {
  double defect;
  explicit BianchiViolation(double d)
      : std::runtime_error("first Bianchi identity violated, defect = " +
                           std::to_string(d)),
        defect(d) {}
};

struct SchemaError : std::runtime_error {
  std::string field;
  SchemaError(std::string f, const std::string& msg)
      : std::runtime_error("schema error at '" + f + "': " + msg),
        field(std::move(f)) {}
};

struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NearSingularTorusPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kco
