#pragma once

#include <stdexcept>
#include <string>

namespace jetrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition check.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured size cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class Overflow : public Error {
public:
    using Error::Error;
};

/// An internal verification failed; the result is not returned.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

}  // namespace jetrep
