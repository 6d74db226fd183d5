#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccbif {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression or config text failed to parse; `position` is a byte offset
/// (expressions) or a line number (config files).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

/// A reaction evaluation left the admissible region s > -eps/2.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Sub/supersolution bracket violated (sub > sup somewhere, or wrong
/// residual sign).
class OrderingError : public Error {
public:
    using Error::Error;
};

/// A standing structural hypothesis on the weights failed (e.g. a does
/// not change sign).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (bad key, range violation, malformed file).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace ccbif
