#pragma once

#include <stdexcept>
#include <string>

namespace delgt {

/// Thrown when a caller violates a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a brute-force enumeration would exceed its configured cap.
/// Exceeding a cap is an explicit error, never a silent pass.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files (matrix, vector, codebook, metadata).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace delgt
