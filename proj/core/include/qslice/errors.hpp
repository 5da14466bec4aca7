#pragma once

#include <stdexcept>
#include <string>

namespace qslice {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Attempt to invert the zero quaternion.
class ZeroDivideError : public Error {
public:
    explicit ZeroDivideError(const std::string& what) : Error(what) {}
};

/// Evaluation requested at a point of the symmetrization zero set.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// Operation applied to the zero polynomial where it is undefined.
class ZeroPolynomialError : public Error {
public:
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

/// Splitting frame (I, J) is not orthonormal.
class FrameError : public Error {
public:
    explicit FrameError(const std::string& what) : Error(what) {}
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Numerical state that the underlying theory rules out. Signals a
/// breakdown of the computation, never an expected condition.
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

} // namespace qslice
