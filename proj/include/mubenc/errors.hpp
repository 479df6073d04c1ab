#pragma once

#include <stdexcept>
#include <string>

namespace mubenc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix or state failed its numeric invariant (unitarity, unit norm).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Raised by MUB verification; carries the offending pair of states.
class MubInvariantViolation : public Error {
 public:
  MubInvariantViolation(const std::string& what, int basis_a, int basis_b, int elem_a, int elem_b)
      : Error(what), basis_a(basis_a), basis_b(basis_b), elem_a(elem_a), elem_b(elem_b) {}

  int basis_a;
  int basis_b;
  int elem_a;
  int elem_b;
};

class ImageOutsideBasis : public Error {
 public:
  using Error::Error;
};

class InconsistentShift : public Error {
 public:
  using Error::Error;
};

/// The exponent system over GF(d) has no solution for the requested codeword.
class NoSolution : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnidentifiedState : public Error {
 public:
  using Error::Error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

}  // namespace mubenc
