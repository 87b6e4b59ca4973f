#pragma once

#include <stdexcept>

namespace ves {

// Argument outside a function's domain (k <= 0, malformed grid, non-finite input).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter tuple rejected by the feasibility checks.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation left the representable range or produced a non-finite value.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ves
