#pragma once

#include <functional>

#include "nlcu/errors.hpp"

namespace nlcu {

/// Look-ahead kernel omega_eta with support [0, eta]: nonnegative,
/// nonincreasing, unit integral. `antiderivative`, when present, enables
/// exact cell-integrated weights.
struct Kernel {
  double eta = 0.0;
  std::function<double(double)> omega;
  std::function<double(double)> antiderivative;  // may be empty
};

/// omega(x) = 3 (eta^2 - x^2) / (2 eta^3), antiderivative (3 eta^2 x - x^3) / (2 eta^3).
Kernel make_quadratic_kernel(double eta);

/// omega(x) = 1/eta on [0, eta].
Kernel make_constant_kernel(double eta);

}  // namespace nlcu
