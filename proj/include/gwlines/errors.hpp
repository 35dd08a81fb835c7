#ifndef GWLINES_ERRORS_HPP
#define GWLINES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwlines {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition or malformed input (CLI exit code 2).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Malformed JSON or schema violation (CLI exit code 2).
struct SchemaError : InputError {
    explicit SchemaError(const std::string& msg) : InputError(msg) {}
};

/// Degenerate geometric configuration: non-simple line, non-generic
/// Gauss curve, vanishing index determinant (CLI exit code 3).
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

/// Integer factorization budget exceeded while reducing a square class.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

} // namespace gwlines

#endif
