#pragma once

#include <stdexcept>
#include <string>

namespace tempweak {

// Base for all toolkit errors. The CLI maps ArgumentError and ParseError
// descendants to exit code 1 and IoError to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class InvalidClassError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// A batch with exactly one fake slot admits no fixed-point-free pairing.
class InfeasibleDerangementError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class InsufficientDataError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tempweak
