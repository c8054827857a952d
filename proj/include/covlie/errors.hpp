#pragma once

#include <stdexcept>
#include <string>

namespace covlie {

/// Operands belong to different coefficient fields.
struct FieldMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter combination the construction is not defined for
/// (e.g. tau_c at odd l, or an infinite group where a finite one is required).
struct UnsupportedInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An image escaped the designated finite window; the message names the
/// escaping basis label.
struct WindowOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element violated a structural precondition (non-canonical input,
/// vector outside a fixed-point subalgebra, non-involutive map, ...).
struct InvalidElementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace covlie
