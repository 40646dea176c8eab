#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong ring, constant term,
/// non-Lyndon word, mismatched contexts, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DivisionByZero : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A p-adic computation ran out of precision, or the requested check needs
/// more digits than the representation carries.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A runtime-checked mathematical invariant failed. Seeing one of these means
/// either a bug or a false premise about the input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace magnus
