#pragma once

#include <stdexcept>
#include <string>

namespace askey {

// Division by an exact zero (scalar, rational function, or operator coefficient).
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Mixing values attached to different formal coordinates (eta, x, z, t).
class VariableMismatch : public std::invalid_argument {
public:
    explicit VariableMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Request violates a registry constraint (unknown family, excluded variant,
// degree above N for a finite family, blacklisted parameter value, ...).
class ConstraintError : public std::invalid_argument {
public:
    explicit ConstraintError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace askey
