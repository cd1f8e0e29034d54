#pragma once

#include <stdexcept>
#include <string>

namespace micz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Gamma quotient hit a non-positive integer argument.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be a multiple of the identity was not.
class NotScalarError : public Error {
 public:
  using Error::Error;
};

/// The requested parameters lie outside the supported grid.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The evaluation oracle cannot decide an equality (fractional u/w powers).
class OracleInapplicableError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at an excluded locus (u = 0 or w = 0 under a negative power).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NonDominantError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class DivergentError : public Error {
 public:
  using Error::Error;
};

/// The highest-weight ansatz search found no admissible solution.
class DeterminationError : public Error {
 public:
  using Error::Error;
};

/// A radial solution failed to solve its ODE.
class NonZeroResidual : public Error {
 public:
  using Error::Error;
};

/// A parameter-scaling produced an irrational factor.
class IrrationalScaleError : public Error {
 public:
  using Error::Error;
};

}  // namespace micz
