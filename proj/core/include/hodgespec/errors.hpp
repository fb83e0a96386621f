#pragma once

#include <stdexcept>
#include <string>

namespace hodgespec {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A face literal that violates the face invariants (duplicate vertex, empty, negative id).
class MalformedFaceError : public Error {
public:
    using Error::Error;
};

/// An operation was asked about a face that is not part of the complex.
class UnknownFaceError : public Error {
public:
    using Error::Error;
};

/// A dimension index outside the range on which the requested operator is defined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid generator or query parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Exact search refused because the vertex count exceeds the configured cap.
class SearchCapError : public Error {
public:
    using Error::Error;
};

/// A bound or diagnostic was evaluated on a complex that fails its mathematical precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (complex files, generator specs, catalog files).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hodgespec
