#pragma once

#include <stdexcept>
#include <string>

namespace wfa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible is singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain
/// (non-ap input, foreign letter, non-binary alphabet, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// det(B0 + B1 - E) != 0: only constant functions can be synthesized.
class NonconstantImpossible : public Error {
 public:
  using Error::Error;
};

}  // namespace wfa
