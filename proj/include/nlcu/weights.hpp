#pragma once

#include <vector>

#include "nlcu/grid.hpp"
#include "nlcu/kernel.hpp"

namespace nlcu {

/// Cell-integrated kernel weights gamma_k = int_{k dx}^{min((k+1) dx, eta)} omega.
///
/// gamma has n_eta + 1 entries; the last one is the partial-window weight and
/// is exactly zero when eta/dx is an integer.
struct KernelWeights {
  std::vector<double> gamma;
  int n_eta = 0;  // floor(eta / dx)
  double dx = 0.0;
  double eta = 0.0;
  bool integer_ratio = false;

  double gamma0() const { return gamma.empty() ? 0.0 : gamma.front(); }
};

KernelWeights compute_kernel_weights(const Kernel& kernel, double dx);

/// true when eta/dx is a natural number up to relative tolerance 1e-9
bool is_integer_ratio(double eta, double dx, int* ratio_out = nullptr);

}  // namespace nlcu
