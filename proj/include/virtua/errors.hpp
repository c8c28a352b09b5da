#pragma once

#include <stdexcept>
#include <string>

namespace virtua {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic contract violations.
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct DegreeOfZeroError : Error {
    using Error::Error;
};
struct MonomialDivisionError : Error {
    using Error::Error;
};

// Validation failures on user-supplied data (rings, matrices, complexes).
// CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};
struct NotHomogeneousError : InputError {
    using InputError::InputError;
};
struct NotAComplexError : InputError {
    using InputError::InputError;
};

// A stated hypothesis of an operation does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

// A resource cap (variables, matrix size, pair queue, wall clock) was hit.
// CLI maps these to exit code 3.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace virtua
