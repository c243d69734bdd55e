#pragma once

#include <stdexcept>
#include <string>

namespace dnnclust {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input cannot be triangulated: fewer than three distinct points, or all
/// points collinear. Callers that can fall back to a chain/MST graph should
/// catch this.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

/// A parameter violates its contract (sigma <= 0, k out of range, ...).
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

/// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// An internal invariant was violated. Indicates a bug, not a user error.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace dnnclust
