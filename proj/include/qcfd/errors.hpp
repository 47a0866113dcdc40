#pragma once

#include <stdexcept>
#include <string>

namespace qcfd {

/// Argument outside the mathematical domain of an operation (pole, order out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inconsistent problem or solver configuration detected before any numerics run.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure inside a numerical kernel (singular matrix, degenerate combination).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcfd
