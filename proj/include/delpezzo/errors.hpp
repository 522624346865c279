#pragma once

#include <stdexcept>

namespace delpezzo {

// Everything thrown by this library derives from Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector length disagrees with the ambient dimension / lattice rank.
struct DimensionError : Error {
    using Error::Error;
};

// Zero vector, coincident points, empty generator set, malformed input.
struct DegenerateInput : Error {
    using Error::Error;
};

// A certified-structure or domain invariant failed to hold.
struct InvariantViolation : Error {
    using Error::Error;
};

// Surface degree outside the validated scope of an operation.
struct UnsupportedDegree : Error {
    using Error::Error;
};

// Lookup of an element that is not in the given set.
struct NotFound : Error {
    using Error::Error;
};

// Brute-force oracle guard exceeded.
struct OracleScope : Error {
    using Error::Error;
};

} // namespace delpezzo
