#pragma once

#include <stdexcept>
#include <string>

namespace rauzy {

// Requested computation would exceed a configured size cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power iteration (or a vector recursion) did not settle within its budget.
struct NonConvergentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPisotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSelfReplicatingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gram-Schmidt input was linearly dependent within tolerance.
struct DegenerateInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateCellError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rauzy
