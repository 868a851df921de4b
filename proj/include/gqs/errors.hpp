#pragma once

#include <stdexcept>
#include <string>

namespace gqs {

// Base class for all domain errors raised by this library. CLI maps these
// to exit code 2 (3 for QuadratureNotConverged).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulus : Error {
    using Error::Error;
};

struct ReduciblePolynomial : Error {
    using Error::Error;
};

struct ZeroPlanck : Error {
    using Error::Error;
};

struct ContextMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct NonPrimeEll : Error {
    using Error::Error;
};

struct InvalidDimension : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct EvenDimension : Error {
    using Error::Error;
};

struct StateOutsideSubspace : Error {
    using Error::Error;
};

struct StateOutsideHA : Error {
    using Error::Error;
};

struct EvenS : Error {
    using Error::Error;
};

struct OnCut : Error {
    using Error::Error;
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};

// Raised by the spec-string / element-text parsers; carries a character
// position so CLI diagnostics can point at the offending token.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

}  // namespace gqs
