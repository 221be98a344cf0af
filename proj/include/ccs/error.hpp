#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (bad JSON, non-unimodular matrix, ...).
class InvalidInput : public Error {
    using Error::Error;
};

/// An element required to be hyperbolic (|trace| > 2) is not.
class NotHyperbolic : public Error {
    using Error::Error;
};

/// Circle-lift tracking could not resolve an increment unambiguously.
class TrackingError : public Error {
    using Error::Error;
};

/// Word-ball enumeration needed a radius beyond the configured cap.
class EnumerationCapExceeded : public Error {
    using Error::Error;
};

/// A query point lies within tolerance of a lamination leaf.
class LeafAmbiguity : public Error {
    using Error::Error;
};

/// Geometric configuration is degenerate (coincident points, flat hull, ...).
class DegenerateGeometry : public Error {
    using Error::Error;
};

}  // namespace ccs
