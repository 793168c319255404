#pragma once

#include <stdexcept>
#include <string>

namespace guelab {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation point outside the validity range of an asymptotic regime.
struct RegimeMismatch : std::domain_error {
    explicit RegimeMismatch(const std::string& what) : std::domain_error(what) {}
};

// Adaptive quadrature could not reach the requested tolerance within budget.
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigenvalue computation failed to converge.
struct EigensolverFailure : std::runtime_error {
    explicit EigensolverFailure(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment or CLI configuration.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace guelab
