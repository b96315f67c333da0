#pragma once

#include <stdexcept>
#include <string>

namespace omact {

// Base class for everything the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two objects over different ground sets were combined.
struct AmbientMismatchError : Error {
    using Error::Error;
};

// Input data violates a construction invariant (axioms, duplicate labels, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Malformed input file or JSON.
struct ParseError : Error {
    using Error::Error;
};

// The operation needs data the instance does not carry (e.g. orientations).
struct CapabilityError : Error {
    using Error::Error;
};

// Refused to enumerate 2^E: ground set larger than the configured guard.
struct SizeGuardError : Error {
    using Error::Error;
};

// Two independent internal routes disagreed. Indicates a bug, not bad input.
struct InternalCheckError : Error {
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace omact
