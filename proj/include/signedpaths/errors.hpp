#pragma once

#include <stdexcept>
#include <string>

namespace signedpaths {

// Statistic requested outside the range where it is defined (e.g. type D
// descents for n < 2).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input violates an operation's precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace signedpaths
