#include "nlcu/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "nlcu/errors.hpp"

namespace nlcu {

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(b) < std::abs(a) ? b : a;
}

double minmod3(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

std::vector<double> compute_slopes(const std::vector<double>& values, const Grid& grid,
                                   double theta) {
  if (!(theta >= 1.0 && theta <= 2.0))
    throw invalid_parameter("compute_slopes: theta must lie in [1, 2]");
  const int n = grid.n_cells();
  const double dx = grid.dx();
  std::vector<double> s(n);
  for (int j = 0; j < n; ++j) {
    const double bw = values[j] - values[grid.wrap(j - 1)];
    const double fw = values[grid.wrap(j + 1)] - values[j];
    double sj = minmod3(theta * bw, 0.5 * (bw + fw), theta * fw) / dx;
    // clamp so both one-sided values stay between the adjacent cell averages
    const double half = 0.5 * dx * sj;
    const double lo = std::max(std::min(0.0, bw), std::min(0.0, fw));
    const double hi = std::min(std::max(0.0, bw), std::max(0.0, fw));
    const double clamped = std::clamp(half, lo, hi);
    if (clamped != half) sj = 2.0 * clamped / dx;
    s[j] = sj;
  }
  return s;
}

Reconstruction interface_values(const std::vector<double>& values,
                                const std::vector<double>& slopes, const Grid& grid) {
  const int n = grid.n_cells();
  const double h = 0.5 * grid.dx();
  Reconstruction r;
  r.slopes = slopes;
  r.left_values.resize(n);
  r.right_values.resize(n);
  for (int j = 0; j < n; ++j) {
    const int jp = grid.wrap(j + 1);
    r.left_values[j] = values[j] + h * slopes[j];
    r.right_values[j] = values[jp] - h * slopes[jp];
  }
  return r;
}

}  // namespace nlcu
