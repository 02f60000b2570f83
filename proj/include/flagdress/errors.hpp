#pragma once

#include <stdexcept>
#include <string>

namespace flagdress {

// Base of every exception thrown by the library. The CLI maps these to exit
// code 2 (input or usage error) unless stated otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (bad sizes, non-increasing dims...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed text input. `position` is a 0-based character offset (or the
// offending entry index for structured input), -1 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long position = -1)
        : Error(position >= 0 ? what + " (at position " + std::to_string(position) + ")" : what),
          position_(position) {}
    long position() const noexcept { return position_; }

private:
    long position_;
};

// An operation's mathematical precondition failed on otherwise valid input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Random instance generation ran out of its resample budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration refused because it exceeds the size guard.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace flagdress
