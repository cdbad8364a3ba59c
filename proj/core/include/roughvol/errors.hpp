#pragma once

#include <stdexcept>
#include <string>

namespace roughvol {

// Bad run configuration (CLI exit code 1).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: quadrature non-convergence, indefinite covariance,
// diverged state, degenerate optimization (CLI exit code 2).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace roughvol
