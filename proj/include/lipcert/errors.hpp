#pragma once

#include <stdexcept>
#include <string>

namespace lipcert {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values built over different variable contexts were combined.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

/// Syntax error in a problem file, expression, or curve spec.
/// Positions are 1-based; col 0 means "whole line".
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line), col_(col), message_(msg) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

}  // namespace lipcert
