#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace z2r {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of a binary operation live in different ambient spaces.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed matrix or vector text. line/column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// An enumeration would exceed the configured 2^cap element limit.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::optional<std::size_t> upper_bound = std::nullopt)
        : Error(what), upper_bound_(upper_bound) {}

    /// Best distance found before giving up, when the operation was a distance search.
    [[nodiscard]] std::optional<std::size_t> upper_bound() const { return upper_bound_; }

private:
    std::optional<std::size_t> upper_bound_;
};

/// Hypotheses of a criterion or construction do not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace z2r
