#pragma once

#include <stdexcept>
#include <string>

namespace dynamap {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree (or a buffer has the wrong length).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A matrix required to be Hermitian exceeds the Hermiticity tolerance.
struct NotHermitian : Error {
    using Error::Error;
};

/// An iterative routine failed to reach its convergence target.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// The Choi matrix of a map is not Hermitian, so a CP verdict is undefined.
struct NonHermitianChoi : Error {
    using Error::Error;
};

/// A file or JSON document could not be parsed or failed validation.
struct ParseError : Error {
    using Error::Error;
};

/// An argument is outside the documented domain of an operation.
struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace dynamap
