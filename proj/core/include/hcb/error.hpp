#pragma once

#include <stdexcept>
#include <string>

namespace hcb {

/// Raised when caller-supplied data violates an operation's precondition
/// (unknown type label, weight of the wrong rank, element outside a group).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal cross-check fails. Never expected; the message
/// carries the witness.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hcb
