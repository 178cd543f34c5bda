#ifndef WEBFOLIO_ERROR_HPP
#define WEBFOLIO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace webfolio {

// Base for all mathematical errors (CLI exit code 2 unless refined below).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is degenerate for the requested operation (zero polynomial, ...).
struct DegenerateInput : MathError {
    explicit DegenerateInput(const std::string& msg) : MathError(msg) {}
};

// A stated precondition does not hold.
struct PreconditionError : MathError {
    explicit PreconditionError(const std::string& msg) : MathError(msg) {}
};

// Valid input, but outside what this implementation supports.
struct UnsupportedCase : MathError {
    explicit UnsupportedCase(const std::string& msg) : MathError(msg) {}
};

// Family parameters violate their constraints.
struct ParameterError : MathError {
    explicit ParameterError(const std::string& msg) : MathError(msg) {}
};

// Numeric routine failed to reach the requested quality (exit code 3).
struct NumericFailure : MathError {
    std::vector<double> residuals;
    explicit NumericFailure(const std::string& msg, std::vector<double> res = {})
        : MathError(msg), residuals(std::move(res)) {}
};

// Expression parser diagnostic.
struct ParseError : std::runtime_error {
    int position;
    std::string expected;
    ParseError(const std::string& msg, int pos, std::string exp)
        : std::runtime_error(msg), position(pos), expected(std::move(exp)) {}
};

} // namespace webfolio

#endif
