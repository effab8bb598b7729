#pragma once

#include <stdexcept>
#include <string>

namespace greenseq {

// Bad input from the caller: index out of range, malformed matrix, wrong kind.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checked integer arithmetic overflowed the scalar type.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A mathematical invariant that must always hold was found broken.
// This signals a bug in the library, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested operation exceeds a configured size bound.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stepwise construction (hyperbolic induction, triangular composition)
// could not be completed.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace greenseq
