#pragma once

#include <stdexcept>
#include <string>

namespace mw {

// Bad input: malformed election text, violated preconditions, unusable flags.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured search budget or tie-enumeration limit was exceeded.
// The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mw
