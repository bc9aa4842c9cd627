#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

/// Non-conformable operands. The message names both shapes.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (non-DKP input, off-shell
/// momentum, wrong space-time dimension, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed external input. The message names the offending path.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dkp
