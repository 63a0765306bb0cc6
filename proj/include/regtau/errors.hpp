// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace regtau {

// Invalid user-supplied data or configuration (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: singular systems, root-finder breakdown (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// All samples clipped or all exactly zero: the IRLS weight denominator vanishes.
class DegenerateWeightsError : public NumericalError {
 public:
  explicit DegenerateWeightsError(const std::string& msg) : NumericalError(msg) {}
};

// Raised when every restart of a multi-start solve failed.
class SolverError : public NumericalError {
 public:
  SolverError(const std::string& msg, std::vector<std::string> restart_log)
      : NumericalError(msg), per_restart(std::move(restart_log)) {}
  std::vector<std::string> per_restart;
};

}  // namespace regtau
