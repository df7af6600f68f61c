#pragma once

#include <stdexcept>
#include <string>

namespace spectrum_color {

/// Raised when an argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a coloring is not in the state an operation needs
/// (e.g. an uncolored vertex where a colored one is required).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// gcd of a matrix without nonzero entries.
class UndefinedGcd : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Brute-force enumeration would exceed the configured cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectrum_color
