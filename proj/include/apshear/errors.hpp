#pragma once

#include <stdexcept>
#include <string>

namespace apshear {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear solver did not reach the requested residual.
struct SolveFailure : Error {
    using Error::Error;
};

// exp() argument exceeded the configured cap (default 700).
struct OverflowError : Error {
    using Error::Error;
};

// Real-power evaluation would need a complex result.
struct NonRealError : Error {
    using Error::Error;
};

// Argument outside the admissible domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

struct DivisionNearZero : Error {
    using Error::Error;
};

struct IncompatibleField : Error {
    using Error::Error;
};

struct NoRealRootError : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct InvalidRoot : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct InvalidMask : Error {
    using Error::Error;
};

struct SingularRoot : Error {
    using Error::Error;
};

}  // namespace apshear
