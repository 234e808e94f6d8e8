#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnmodes {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed model text or mode string. Line and column are 1-based; zero
// means "not applicable" (mode strings are single-line).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) {
            return column == 0 ? what : "column " + std::to_string(column) + ": " + what;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Whole-space operation requested above the configured dimension cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// iterate_omega was handed an operator with X ⊄ U(X) for some iterate X.
class InflationError : public Error {
public:
    using Error::Error;
};

} // namespace bnmodes
