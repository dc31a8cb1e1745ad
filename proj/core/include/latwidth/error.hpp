// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace latwidth {

// Bad user data or a violated documented precondition. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-side precondition of an algorithm does not hold (for example a
// constraint row outside the dual cone). Kept distinct from infeasibility.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Enumeration would exceed the configured point budget.
class BudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

// An internal mathematical invariant failed. CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define LATWIDTH_CHECK(cond, msg)                                   \
  do {                                                              \
    if (!(cond)) throw ::latwidth::InvariantViolation(std::string(msg)); \
  } while (false)

}  // namespace latwidth
