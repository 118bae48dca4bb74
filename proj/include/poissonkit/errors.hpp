#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poissonkit {

/// Syntax error from one of the text parsers; `position` is a 0-based
/// offset into the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Operands built over different variable rosters were combined.
class ContextMismatchError : public std::runtime_error {
public:
    explicit ContextMismatchError(const std::string& message)
        : std::runtime_error("context mismatch: " + message) {}
};

/// A computation exceeded a configured size or memory cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& message)
        : std::runtime_error("resource limit exceeded: " + message) {}
};

} // namespace poissonkit
