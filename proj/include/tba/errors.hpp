#pragma once

#include <stdexcept>
#include <string>

namespace tba {

// Malformed inputs: dangling endpoints, duplicate ids, dimension mismatches.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be read, parsed, or validated.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flow evaluated outside the active branch domain. Carries link id and the
// violated bound in the message.
struct BranchDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Box with zero width cannot be split or hulled.
struct DegenerateBoxError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace tba
