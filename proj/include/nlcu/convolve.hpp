#pragma once

#include <vector>

#include "nlcu/grid.hpp"
#include "nlcu/kernel.hpp"
#include "nlcu/weights.hpp"

namespace nlcu {

enum class Side { left, right };

/// Nonlocal term R_{j+1/2} at every interface from cell averages, optionally
/// slope-corrected in the partial kernel window (second-order variant).
/// Passing slopes == nullptr is the piecewise-constant (first-order) variant.
std::vector<double> convolve_interfaces(const std::vector<double>& cell_values,
                                        const KernelWeights& weights,
                                        const std::vector<double>* slopes, const Grid& grid);

/// Nonlocal term at the shifted point x_{j+1/2} + shift, where shift = c^- dt
/// (left, <= 0) or c^+ dt (right, >= 0). Midpoint quadrature over the shifted
/// strip partition of the kernel window; requires eta/dx integer and
/// |shift| <= dx/2.
double convolve_shifted(const std::vector<double>& cell_values, const std::vector<double>& slopes,
                        const Kernel& kernel, const Grid& grid, int j, double shift, Side side);

/// d/dt of the nonlocal term at a shifted point: negative kernel-weighted sum
/// of the already-computed flux slopes F_x of the matching side family.
double convolve_time_derivative(const std::vector<double>& flux_slopes, const Kernel& kernel,
                                const Grid& grid, int j, double shift, Side side);

/// Count of whole-array nonlocal evaluations (one per "family"); lets tests
/// pin the per-step cost contract of the fully-discrete scheme.
long& nonlocal_family_counter();

}  // namespace nlcu
