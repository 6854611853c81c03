#pragma once

#include <stdexcept>
#include <string>

namespace knotsig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (words, colorings, torus points, JSON).
struct ParseError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct PrecisionExhausted : Error {
  using Error::Error;
};

struct NotInSum : Error {
  using Error::Error;
};

struct NotEndomorphism : Error {
  using Error::Error;
};

struct ColoringMismatch : Error {
  using Error::Error;
};

// Raised when a reduced basis fails to be invariant. This is a bug, never a
// legitimate input condition.
struct SubspaceNotInvariant : Error {
  using Error::Error;
};

struct EvaluationAtOne : Error {
  using Error::Error;
};

struct UnsupportedColoring : Error {
  using Error::Error;
};

struct InvalidCComplex : Error {
  using Error::Error;
};

struct OutsideGuarantee : Error {
  using Error::Error;
};

}  // namespace knotsig
