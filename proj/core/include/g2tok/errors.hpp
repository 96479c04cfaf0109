#pragma once

#include <stdexcept>
#include <string>

namespace g2tok {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Overflow of the fixed-width coefficient type. Results are exact or the
// computation aborts; wraparound is never allowed to leak into a result.
struct ArithmeticError : Error {
  using Error::Error;
};

// Exact polynomial division was requested but a nonzero remainder exists.
struct NotDivisibleError : Error {
  using Error::Error;
};

// A pattern entry exceeds the upper bound determined by the highest weight.
struct BoundViolationError : Error {
  using Error::Error;
};

// A pattern fails the cone (lower-bound) inequalities.
struct CirclingViolationError : Error {
  using Error::Error;
};

// A bad-middle pattern with one of the tabulated boxings matched none of the
// sub-conditions of its case table. Signals a transcription bug, so this is
// never silently defaulted.
struct NoCaseMatchError : Error {
  using Error::Error;
};

}  // namespace g2tok
