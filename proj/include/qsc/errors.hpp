#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in polynomial rings with different numbers of variables.
struct DimensionError : Error {
    using Error::Error;
};

// Variable or matrix index out of range.
struct IndexError : Error {
    using Error::Error;
};

// Non-square matrix where a square one is required.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid Grassmannian parameters (requires 0 < r < k).
struct SpecError : Error {
    using Error::Error;
};

// Polynomial has the wrong weighted degree for the requested operation.
struct DegreeError : Error {
    using Error::Error;
};

// Operation requires a homogeneous polynomial.
struct HomogeneityError : Error {
    using Error::Error;
};

// Division by zero (rationals, field elements).
struct DivisionError : Error {
    using Error::Error;
};

// An exact value that was expected to be rational is not.
struct RationalityError : Error {
    using Error::Error;
};

// Floating-point residual exceeds the tolerance; caller should raise precision.
struct PrecisionError : Error {
    using Error::Error;
};

// Parameters outside the range the implementation supports.
struct UnsupportedError : Error {
    using Error::Error;
};

// Rejected expression text. `position` is a 1-based character offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error("at position " + std::to_string(pos) + ": " + what), position(pos) {}
};

} // namespace qsc
