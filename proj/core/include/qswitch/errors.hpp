#pragma once

#include <stdexcept>
#include <string>

namespace qswitch {

// Shape mismatch between operands (matmul, partial trace, control dimension).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation: a probability
// outside [0,1], a matrix that is not a density matrix, p > 1/3, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Post-selection on an outcome whose probability is below the degeneracy
// threshold; the conditional state is undefined.
class DegenerateOutcomeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qswitch
