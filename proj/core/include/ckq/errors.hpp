#pragma once

#include <stdexcept>
#include <string>

namespace ckq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension mismatch: " + what) {}
};

class BadDimension : public Error {
 public:
  explicit BadDimension(int n)
      : Error("unsupported dimension N=" + std::to_string(n)) {}
};

class NotAUnit : public Error {
 public:
  explicit NotAUnit(const std::string& what) : Error("not a unit: " + what) {}
};

class NotTriangular : public Error {
 public:
  NotTriangular() : Error("matrix is neither lower nor upper triangular") {}
};

/// A term kept a nilpotent parameter to a negative power after all
/// cancellation, i.e. the expression has no value over the dual algebra.
class NegativeNilpotentPower : public Error {
 public:
  explicit NegativeNilpotentPower(const std::string& what)
      : Error("negative power of nilpotent parameter: " + what) {}
};

class NotAffineInJv : public Error {
 public:
  explicit NotAffineInJv(const std::string& what)
      : Error("entry is not of the form delta + Jv*r: " + what) {}
};

class InconsistentPairing : public Error {
 public:
  explicit InconsistentPairing(const std::string& what)
      : Error("inconsistent pairing system: " + what) {}
};

class WordTooLong : public Error {
 public:
  WordTooLong(std::size_t len, std::size_t bound)
      : Error("word of length " + std::to_string(len) + " exceeds bound " +
              std::to_string(bound)) {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : Error("precondition violated: " + what) {}
};

}  // namespace ckq
