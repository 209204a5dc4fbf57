#pragma once

#include <stdexcept>
#include <string>

namespace cubiq {

// Base class for every input/domain failure raised by the library. The CLI
// maps these to exit code 1; any other exception counts as an internal error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// u = -1 or u = -2: a root of the numerator collides with the root of the
// denominator and the cubic degenerates to a quadratic.
struct DegenerateParameter : Error {
    using Error::Error;
};

struct NotInNormalForm : Error {
    using Error::Error;
};

// A polynomial factor of degree >= 3 irreducible over Q. Reported, never
// silently dropped.
struct UnresolvableFactor : Error {
    using Error::Error;
};

struct TooFewCriticalPoints : Error {
    using Error::Error;
};

struct InvalidCriticalData : Error {
    using Error::Error;
};

// Arithmetic between elements of Q(sqrt(d1)) and Q(sqrt(d2)) with d1 != d2.
// One radicand per computation; there is no implicit compositum.
struct MixedRadicand : Error {
    using Error::Error;
};

// Generic precondition violation: non-prime modulus, odd-valuation input to
// the square-root lifter, coincident interpolation points, and the like.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace cubiq
