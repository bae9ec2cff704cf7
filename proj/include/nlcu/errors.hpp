#pragma once

#include <stdexcept>
#include <string>

namespace nlcu {

// Bad user/config input (wrong parameter, mismatched grids, unknown names).
struct invalid_parameter : std::invalid_argument {
  explicit invalid_parameter(const std::string& msg) : std::invalid_argument(msg) {}
};

// A time step violated the CFL restriction of the active scheme.
struct cfl_violation : std::runtime_error {
  explicit cfl_violation(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature non-convergence, non-finite state, and similar runtime breakdowns.
struct numerical_failure : std::runtime_error {
  explicit numerical_failure(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nlcu
