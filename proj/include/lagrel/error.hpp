#pragma once

#include <stdexcept>
#include <string>

namespace lagrel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Violated operation precondition (non-lagrangian input, non-coisotropic
/// subspace, relation not 1-regular, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotLagrangian : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotCoisotropic : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Closure work exceeded the configured component bound; the monoid may be
/// infinite.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline void require_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) +
                            " != " + std::to_string(b));
}

}  // namespace lagrel
