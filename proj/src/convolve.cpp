#include "nlcu/convolve.hpp"

#include <cmath>
#include <string>

#include "nlcu/errors.hpp"

namespace nlcu {

long& nonlocal_family_counter() {
  thread_local long counter = 0;
  return counter;
}

std::vector<double> convolve_interfaces(const std::vector<double>& cell_values,
                                        const KernelWeights& weights,
                                        const std::vector<double>* slopes, const Grid& grid) {
  const int n = grid.n_cells();
  if (std::abs(weights.dx - grid.dx()) > 1e-12 * grid.dx())
    throw invalid_parameter("convolve_interfaces: weights built for dx=" +
                            std::to_string(weights.dx) + ", grid has dx=" +
                            std::to_string(grid.dx()));
  if (static_cast<int>(cell_values.size()) != n)
    throw invalid_parameter("convolve_interfaces: state size does not match grid");
  if (slopes && static_cast<int>(slopes->size()) != n)
    throw invalid_parameter("convolve_interfaces: slope array size does not match grid");

  ++nonlocal_family_counter();

  const int n_eta = weights.n_eta;
  // padded copy so the inner sum needs no modulo; interface j reads cells
  // j+1 .. j+n_eta+1
  std::vector<double> pad(n + n_eta + 2);
  for (int i = 0; i < n + n_eta + 2; ++i) pad[i] = cell_values[grid.wrap(i)];

  std::vector<double> R(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < n_eta; ++k) acc += weights.gamma[k] * pad[j + k + 1];
    R[j] = acc;
  }

  if (!weights.integer_ratio) {
    // residual window [n_eta dx, eta] inside cell j+n_eta+1, evaluated at its
    // midpoint on the linear reconstruction
    const double eps = weights.eta - n_eta * weights.dx;
    const double offset = 0.5 * (eps - weights.dx);  // midpoint minus cell center
    const double gtail = weights.gamma[n_eta];
    for (int j = 0; j < n; ++j) {
      const int p = grid.wrap(j + n_eta + 1);
      const double corr = slopes ? (*slopes)[p] * offset : 0.0;
      R[j] += gtail * (cell_values[p] + corr);
    }
  }
  return R;
}

namespace {

struct ShiftChecks {
  int n_eta;
};

ShiftChecks validate_shift(const Kernel& kernel, const Grid& grid, double shift, Side side) {
  int n_eta = 0;
  if (!is_integer_ratio(kernel.eta, grid.dx(), &n_eta))
    throw invalid_parameter("convolve_shifted: eta/dx must be a natural number (eta=" +
                            std::to_string(kernel.eta) + ", dx=" + std::to_string(grid.dx()) +
                            ")");
  if (std::abs(shift) > 0.5 * grid.dx() * (1.0 + 1e-12))
    throw cfl_violation("convolve_shifted: |shift| exceeds dx/2");
  if ((side == Side::left && shift > 0.0) || (side == Side::right && shift < 0.0))
    throw invalid_parameter("convolve_shifted: shift sign inconsistent with side");
  return {n_eta};
}

}  // namespace

double convolve_shifted(const std::vector<double>& cell_values, const std::vector<double>& slopes,
                        const Kernel& kernel, const Grid& grid, int j, double shift, Side side) {
  const auto [n_eta] = validate_shift(kernel, grid, shift, side);
  const double dx = grid.dx();
  const auto& w = kernel.omega;
  double acc = 0.0;

  if (side == Side::left) {
    const double b = -shift;  // width of the strip [x_{j+1/2,l}, x_{j+1/2}]
    const int c0 = grid.wrap(j);
    acc += b * w(0.5 * b) * (cell_values[c0] + 0.5 * (dx + shift) * slopes[c0]);
    for (int l = 0; l <= n_eta - 2; ++l) {
      acc += dx * w((l + 0.5) * dx + b) * cell_values[grid.wrap(j + l + 1)];
    }
    const int cN = grid.wrap(j + n_eta);
    acc += (dx - b) * w(0.5 * ((2 * n_eta - 1) * dx + b)) *
           (cell_values[cN] + 0.5 * shift * slopes[cN]);
  } else {
    const double a = shift;  // x_{j+1/2,r} = x_{j+1/2} + a
    const int c0 = grid.wrap(j + 1);
    acc += (dx - a) * w(0.5 * (dx - a)) * (cell_values[c0] + 0.5 * a * slopes[c0]);
    for (int l = 0; l <= n_eta - 2; ++l) {
      acc += dx * w((l + 1.5) * dx - a) * cell_values[grid.wrap(j + l + 2)];
    }
    const int cN = grid.wrap(j + n_eta + 1);
    acc += a * w(0.5 * (2 * n_eta * dx - a)) * (cell_values[cN] - 0.5 * (dx - a) * slopes[cN]);
  }
  return acc;
}

double convolve_time_derivative(const std::vector<double>& flux_slopes, const Kernel& kernel,
                                const Grid& grid, int j, double shift, Side side) {
  const auto [n_eta] = validate_shift(kernel, grid, shift, side);
  const double dx = grid.dx();
  const auto& w = kernel.omega;
  double acc = 0.0;

  if (side == Side::left) {
    const double b = -shift;
    acc += b * w(0.5 * b) * flux_slopes[grid.wrap(j)];
    for (int l = 0; l <= n_eta - 2; ++l) {
      acc += dx * w((l + 0.5) * dx + b) * flux_slopes[grid.wrap(j + l + 1)];
    }
    acc += (dx - b) * w(0.5 * ((2 * n_eta - 1) * dx + b)) * flux_slopes[grid.wrap(j + n_eta)];
  } else {
    const double a = shift;
    acc += (dx - a) * w(0.5 * (dx - a)) * flux_slopes[grid.wrap(j)];
    for (int l = 0; l <= n_eta - 2; ++l) {
      acc += dx * w((l + 1.5) * dx - a) * flux_slopes[grid.wrap(j + l + 1)];
    }
    acc += a * w(0.5 * (2 * n_eta * dx - a)) * flux_slopes[grid.wrap(j + n_eta)];
  }
  return -acc;
}

}  // namespace nlcu
