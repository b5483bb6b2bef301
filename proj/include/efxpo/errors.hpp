#pragma once

#include <stdexcept>
#include <string>

namespace efxpo {

// Malformed input text (bad fraction, zero denominator, non-integral JSON number).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid input that violates the model (no agents, nonpositive valuation).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A guaranteed property failed to hold; always indicates a bug, never bad input.
class InternalInvariantError : public std::runtime_error {
public:
    explicit InternalInvariantError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the configured allocation budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace efxpo
