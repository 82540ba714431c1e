#pragma once

#include <stdexcept>
#include <string>

namespace bresse {

// Thrown when user-supplied parameters or configuration are invalid.
// Messages name the offending field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown when a numerical procedure fails (singular factorization,
// dimension cap exceeded, eigensolver non-convergence, ...).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bresse
