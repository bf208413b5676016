#pragma once

#include <stdexcept>
#include <string>

namespace subvar {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration: unknown codes, missing focus variables, bad windows.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (ragged series, too few observations).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of a transform (e.g. log of a non-positive level).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A function argument violates its precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Linear algebra failure: non-PD matrices, rank deficiency, NaN propagation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A series with zero residual variance where a scale estimate is required.
class DegenerateSeriesError : public DataError {
 public:
  using DataError::DataError;
};

/// The convex-combination identity does not apply to the given design.
class InapplicableIdentityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace subvar
