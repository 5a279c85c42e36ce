#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtoll {

/// Malformed graph input. `line()` is 1-based, or 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A precondition on the arguments of an operation was violated.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The operation requires a connected graph.
class DisconnectedError : public ArgumentError {
public:
    DisconnectedError() : ArgumentError("graph is not connected") {}
};

/// An exponential solver was asked to run above its configured size cap.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed result failed its own certificate check. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace wtoll
