#pragma once

#include <stdexcept>
#include <string>

namespace wpp {

/// Bad user input: non-coprime weights, points on the coordinate triangle,
/// unsupported fields. Maps to exit code 2 in the CLI.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked mathematical invariant failed at runtime. This signals a bug,
/// never bad input. Maps to exit code 3 in the CLI.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wpp
