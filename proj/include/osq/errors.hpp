#pragma once

#include <stdexcept>
#include <string>

namespace osq {

/// Invalid physical parameters or out-of-domain inputs.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed configuration document.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal numerical failure (singular system, residual out of bounds, ...).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Steady state not reached within the configured period budget.
class NonConvergenceError : public SolverError {
public:
    explicit NonConvergenceError(const std::string& what) : SolverError(what) {}
};

/// Dynamics has no stable steady state (Floquet multiplier outside the unit circle).
class InstabilityError : public SolverError {
public:
    explicit InstabilityError(const std::string& what) : SolverError(what) {}
};

} // namespace osq
