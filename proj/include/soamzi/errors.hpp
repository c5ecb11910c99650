#pragma once

#include <stdexcept>
#include <string>

namespace soamzi {

// Invalid or inconsistent scenario/config input (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A physics integration failed to reach its stated tolerance (CLI exit code 3).
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// The linearized verification run disagreed with the closed-form spectrum
// (CLI exit code 4).
struct OracleGateError : std::runtime_error {
  explicit OracleGateError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace soamzi
