#pragma once

#include <vector>

#include "nlcu/grid.hpp"

namespace nlcu {

/// minmod(a, b): smaller-magnitude argument when signs agree, else zero.
/// Ties with equal magnitude return a.
double minmod(double a, double b);

/// three-argument generalized minmod (all share sign or zero)
double minmod3(double a, double b, double c);

/// Minmod-limited slopes; theta in [1, 2]. theta = 1 is the plain two-point
/// minmod, theta > 1 the generalized minmod of (theta*backward, central,
/// theta*forward) differences. One-sided values implied by the slopes are
/// clamped to the range of the adjacent cell averages.
std::vector<double> compute_slopes(const std::vector<double>& values, const Grid& grid,
                                   double theta);

/// One-sided interface values of the piecewise-linear reconstruction,
/// indexed by interface: left_values[j] = rho_j + dx/2 s_j approaches
/// interface j from the left, right_values[j] = rho_{j+1} - dx/2 s_{j+1}.
struct Reconstruction {
  std::vector<double> slopes;
  std::vector<double> left_values;
  std::vector<double> right_values;
};

Reconstruction interface_values(const std::vector<double>& values,
                                const std::vector<double>& slopes, const Grid& grid);

}  // namespace nlcu
