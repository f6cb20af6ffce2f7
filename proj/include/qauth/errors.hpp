#pragma once

#include <stdexcept>

namespace qauth {

// Operand sizes disagree (e.g. Paulis of different qubit counts).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A name lookup (code name, scheme name) failed.
struct UnknownNameError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An instance is too large for an exact computation.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

}  // namespace qauth
