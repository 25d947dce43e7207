#pragma once

#include <stdexcept>
#include <string>

namespace citetrack {

// Bad input values or violated preconditions. The CLI maps this to exit code 2.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested configuration cannot be satisfied at any parameter choice.
// Carries the smallest rate that would make the request feasible (exit code 3).
struct infeasibility_error : std::runtime_error {
  double min_feasible_rate;
  infeasibility_error(const std::string& msg, double min_rate)
      : std::runtime_error(msg), min_feasible_rate(min_rate) {}
};

// Staleness diverges (zero effective update rate). A distinguished signal,
// never encoded as a number.
struct infinite_staleness_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Iterative solver failed to converge.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failures in the CLI layer (exit code 4).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace citetrack
