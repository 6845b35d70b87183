#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input document (not parseable at all).
struct SyntaxError : Error {
    using Error::Error;
};

/// Structurally invalid graph, grid, or request; the message carries the
/// offending site/edge/parameter locus.
struct ValidationError : Error {
    using Error::Error;
};

/// A parameter override or edge coupling names a parameter that does not
/// exist in the graph's parameter map.
struct UnknownParameterError : ValidationError {
    using ValidationError::ValidationError;
};

/// Fermionic pair requested with both particles on the same site.
struct PauliViolationError : ValidationError {
    using ValidationError::ValidationError;
};

/// Vector/matrix/site-index sizes do not match.
struct DimensionMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

/// Input too large for an operation with a hard size cap.
struct DimensionLimitError : ValidationError {
    using ValidationError::ValidationError;
};

/// Series with too few samples for a metric.
struct EmptySeriesError : ValidationError {
    using ValidationError::ValidationError;
};

/// The eigensolver failed to reach its residual tolerance in the iteration
/// budget. Signals a numerics bug, not bad user input.
struct ConvergenceFailureError : Error {
    using Error::Error;
};

/// File could not be read or written (CLI layer).
struct IoError : Error {
    using Error::Error;
};

}  // namespace qgw
