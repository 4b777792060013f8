#pragma once

#include <stdexcept>
#include <string>

namespace dahaknots {

// Division by an exact zero.
struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// A substitution produced a vanishing denominator.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// An exact division left a nonzero remainder; the message carries it.
struct inexact_division : std::domain_error {
    explicit inexact_division(const std::string& what) : std::domain_error(what) {}
};

// A contract that the algebra guarantees was violated; always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Invalid user-facing input (CLI arguments, malformed cable specs).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dahaknots
