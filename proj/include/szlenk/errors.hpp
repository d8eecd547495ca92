#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace szlenk {

// Argument outside the domain of an operation (e.g. deg(0), gamma of a finite ordinal).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A finite coefficient left the fixed-width range, or a result would be unrepresentably large.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Malformed ordinal or space expression text. `column` is 1-based, counted in bytes.
class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(std::size_t column, const std::string& what)
        : std::invalid_argument("syntax error at column " + std::to_string(column) + ": " + what),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace szlenk
