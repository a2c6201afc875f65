#pragma once

#include <stdexcept>
#include <string>

namespace rankinv {

/// Malformed input text (catalog lines, code files, element strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (reducible modulus, degenerate
/// code, dependent evaluation points, ...).
class MathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rankinv
