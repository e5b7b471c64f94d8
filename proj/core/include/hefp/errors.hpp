#pragma once

#include <stdexcept>
#include <string>

namespace hefp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid precision or sizing request (e.g. fewer than 30 digits).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// The working precision is below the number of moments being solved for.
class PrecisionRuleError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature failure, singular pivot, breakdown of a transformation, ...
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hefp
