#pragma once

#include <stdexcept>
#include <string>

namespace ectx {

// Base for every error raised by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong sizes, non-normalized vectors or tables, bad ids.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input document does not follow the expected schema (bad JSON, wrong shape).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Two projectors asked to be measured jointly are not orthogonal.
class IncompatibleContextError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Family or search parameters outside their domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A cross product or basis completion collapsed to (near) zero norm.
class DegenerateConfigError : public Error {
 public:
  using Error::Error;
};

// A graph does not have the shape a construction requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Shared-vertex marginals disagree between tables.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ectx
