#pragma once

#include <stdexcept>
#include <string>

namespace thomschur {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSpec : Error {
    using Error::Error;
};

struct UnsupportedProduct : Error {
    using Error::Error;
};

struct CardinalityMismatch : Error {
    using Error::Error;
};

struct LengthExceeded : Error {
    using Error::Error;
};

struct InconsistentSystem : Error {
    using Error::Error;
};

struct Underdetermined : Error {
    int kernel_dim;
    explicit Underdetermined(int kdim)
        : Error("linear system is underdetermined, kernel dimension "
                + std::to_string(kdim)),
          kernel_dim(kdim)
    {
    }
};

struct NotInSpan : Error {
    using Error::Error;
};

struct NonIntegerCoefficients : Error {
    using Error::Error;
};

struct UnsupportedSingularity : Error {
    using Error::Error;
};

struct DivisionFailed : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace thomschur
