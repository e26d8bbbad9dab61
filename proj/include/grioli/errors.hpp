#pragma once

#include <stdexcept>
#include <string>

namespace grioli {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad call-site arguments (dimension out of range, invalid config, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// Matrix is singular (or numerically indistinguishable from singular).
struct SingularError : Error {
  using Error::Error;
};

// Matrix is not symmetric positive definite.
struct NotSpdError : Error {
  using Error::Error;
};

// An eigenvalue lies on the closed negative real axis, where the
// principal logarithm is undefined.
struct BranchCutError : Error {
  using Error::Error;
};

// An iteration failed to reach its tolerance within the iteration cap.
struct NoConvergenceError : Error {
  using Error::Error;
};

// det <= 0 where an orientation-preserving map is required.
struct NonOrientationError : Error {
  using Error::Error;
};

// A direction vector is not unit length.
struct NotUnitError : Error {
  using Error::Error;
};

// Shear modulus must be strictly positive.
struct NonPositiveMuError : Error {
  using Error::Error;
};

// A search exhausted its trial budget without a hit.
struct NotFoundError : Error {
  using Error::Error;
};

// A user-supplied field produced NaN or Inf.
struct NonFiniteError : Error {
  using Error::Error;
};

// A verification assertion failed; the message carries the offending inputs.
struct AssertionError : Error {
  using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace grioli
