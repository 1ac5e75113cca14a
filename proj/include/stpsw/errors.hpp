#pragma once

#include <stdexcept>
#include <string>

namespace stpsw {

/// Operand shapes are incompatible for the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result would exceed the configured entry cap.
class SizingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry different numeric modes (rational vs float).
class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 1-based index fell outside its admissible range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An exhaustive enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stpsw
