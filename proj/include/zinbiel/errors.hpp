#pragma once

#include <stdexcept>
#include <string>

namespace zinbiel {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input: bad arguments, mixed fields, malformed text, unknown ids.
struct usage_error : error {
    explicit usage_error(const std::string& what) : error(what) {}
};

// Division by zero / inverse of zero in a field.
struct division_by_zero : usage_error {
    division_by_zero() : usage_error("division by zero") {}
};

// Work limit (pair count or wall time) exhausted.
struct budget_exhausted : error {
    explicit budget_exhausted(const std::string& what) : error(what) {}
};

// Parse failure with a byte offset into the input.
struct parse_error : usage_error {
    std::size_t offset;
    parse_error(std::size_t off, const std::string& what)
        : usage_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

} // namespace zinbiel
