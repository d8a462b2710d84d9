#pragma once

#include <stdexcept>
#include <string>

namespace mrelab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Array length or grid mismatch.
struct ShapeError : Error {
    using Error::Error;
};

/// Input outside an operation's domain (nonzero mean, wrong dimension, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Corrupt or mismatched on-disk data.
struct FormatError : Error {
    using Error::Error;
};

/// A quadrature or root-finder failed to converge to its tolerance.
struct PrecisionError : Error {
    using Error::Error;
};

}  // namespace mrelab
