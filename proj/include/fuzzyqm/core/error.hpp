#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyqm {

// Base of every error raised by the library. The CLI maps ConfigurationError
// to exit status 2 and everything else to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters, mismatched grids, malformed inputs.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Non-finite values, singular systems, failed numerical steps.
class NumericError : public Error {
public:
    using Error::Error;
};

// Inputs that are formally valid but carry no usable information
// (all-zero densities, fully masked logarithms).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Evaluation outside the domain where a formula is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

class UndefinedRatioError : public DomainError {
public:
    using DomainError::DomainError;
};

// A stated physical precondition does not hold for the given state.
class PreconditionError : public Error {
public:
    using Error::Error;
};

namespace detail {

template <class E = ConfigurationError>
inline void require(bool condition, const std::string& message) {
    if (!condition) {
        throw E(message);
    }
}

}  // namespace detail
}  // namespace fuzzyqm
