#pragma once

#include <stdexcept>
#include <string>

namespace bicoulomb {

// A zero divisor (vanishing idempotent component) was hit where an
// invertible value is required.
class NullConeError : public std::domain_error {
public:
    explicit NullConeError(const std::string& msg) : std::domain_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature grid invariant violated.
class GridError : public std::runtime_error {
public:
    explicit GridError(const std::string& msg) : std::runtime_error(msg) {}
};

class IOError : public std::runtime_error {
public:
    explicit IOError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bicoulomb
