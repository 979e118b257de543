#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nano {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed notation text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A precondition of an operation was violated (wrong alphabet, singular input, ...).
/// The message names the operation first: "op: violated precondition".
class DomainError : public Error {
public:
    DomainError(const std::string& operation, const std::string& what)
        : Error(operation + ": " + what) {}
};

/// An exhaustive enumeration would exceed a configured bound.
class CapacityError : public DomainError {
public:
    CapacityError(const std::string& operation, const std::string& bound, long long limit,
                  long long requested)
        : DomainError(operation, bound + " = " + std::to_string(requested) + " exceeds limit " +
                                     std::to_string(limit)) {}
};

}  // namespace nano
