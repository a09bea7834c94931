#pragma once

#include <stdexcept>
#include <string>

namespace iasi {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Empty operand, malformed value, or a name that does not resolve.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation was called outside the domain where its contract holds.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A sum or a progression term does not fit in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Vertex labeling is missing a vertex, names an unknown vertex, or carries an empty set.
class InvalidLabeling : public Error {
public:
    using Error::Error;
};

class NotVertexArithmetic : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DisconnectedGraph : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

} // namespace iasi
