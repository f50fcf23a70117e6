#pragma once

#include <stdexcept>
#include <string>

namespace polylab {

inline constexpr const char* kVersion = "0.1.0";

// Raised when an operation would exceed a configured enumeration / sieve /
// search budget.  CLI maps this to exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when reducing a polynomial mod q kills every coefficient.
class zero_reduction_error : public std::domain_error {
public:
    explicit zero_reduction_error(const std::string& what) : std::domain_error(what) {}
};

// Raised by the simultaneous root iteration when it fails to reach the
// requested residual within the iteration cap.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polylab
