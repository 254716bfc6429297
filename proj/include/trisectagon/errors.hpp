#pragma once

#include <stdexcept>
#include <string>

namespace trisectagon {

// Precondition violated by the caller (CLI exit code 3).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal invariant failed, usually a precision or branch problem (exit code 4).
class InternalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trisectagon
