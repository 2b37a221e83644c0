#pragma once

#include <stdexcept>
#include <string>

/*
  Error taxonomy for the verification engine.  Every contract violation maps
  to a distinct type so tests and callers can assert the exact failure mode;
  nothing in the engine fails silently or "repairs" bad input.
*/

namespace sundial {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// field / matrix kernel
struct InvalidPrime : Error {
  using Error::Error;
};
struct ZeroInverse : Error {
  using Error::Error;
};
struct ArithmeticOverflow : Error {
  using Error::Error;
};

// basis construction and row builders
struct InvalidDimension : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// geometric constructions
struct EmptyInput : Error {
  using Error::Error;
};
struct DimensionTooSmall : Error {
  using Error::Error;
};
struct NotSkew : Error {
  using Error::Error;
};
struct ConstructionFailure : Error {
  using Error::Error;
};

// scheme conditions
struct PrimeTooSmall : Error {
  using Error::Error;
};

// residual/trace rule table
struct UnrecognizedPosition : Error {
  using Error::Error;
};

// appendix verifiers
struct OutOfStatedRange : Error {
  using Error::Error;
};

}  // namespace sundial
