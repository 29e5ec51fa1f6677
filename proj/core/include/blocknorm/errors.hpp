#pragma once

#include <stdexcept>
#include <string>

namespace blocknorm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a Hermitian matrix was given one whose
/// Hermitian residual exceeds the admission tolerance.
class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

/// The iterative eigensolver exhausted its sweep budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A positive semi-definite matrix was required.
class NotPsd : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Family construction with a sign pattern outside the admissible one
/// (diagonal of A nonnegative, diagonal of B negative).
class SignViolation : public Error {
 public:
  using Error::Error;
};

/// A checker was invoked on input that does not satisfy the hypothesis
/// the checked statement assumes.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

/// The determinant shortcut requires the two left blocks to commute.
class BlocksDoNotCommute : public Error {
 public:
  using Error::Error;
};

// File/While-parsing errors (matrix files, CLI inputs).

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NonHermitianBlock : public Error {
 public:
  using Error::Error;
};

}  // namespace blocknorm
