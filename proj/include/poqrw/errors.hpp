#pragma once

#include <stdexcept>
#include <string>

namespace poqrw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A result or a storage request exceeds a configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed or a numeric safeguard tripped.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A walk spec violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue condition fails where an operation needs it.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Two routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace poqrw
