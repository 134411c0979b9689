#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brodmann {

/// Malformed or out-of-contract input (length mismatch, index out of range, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A text or JSON document that does not parse. Line is 1-based, 0 if unknown.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t line = 0)
        : input_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An enumeration would exceed the configured lattice-point budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two computations that must agree did not.
class inconsistency_error : public std::logic_error {
public:
    explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

/// Default cap on lattice points visited by a single enumeration.
inline constexpr std::size_t default_budget = 50'000'000;

}  // namespace brodmann
