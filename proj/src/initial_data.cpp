#include "nlcu/initial_data.hpp"

#include <algorithm>
#include <cmath>

namespace nlcu {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1, 1]
const double kGlNode[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                           0.9061798459386640};
const double kGlWeight[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                             0.2369268850561891, 0.2369268850561891};

}  // namespace

InitialData InitialData::smooth(std::function<double(double)> f) {
  InitialData d;
  d.f_ = std::move(f);
  return d;
}

InitialData InitialData::piecewise(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.size() != values.size() + 1)
    throw invalid_parameter("InitialData::piecewise: need one more breakpoint than value");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
    throw invalid_parameter("InitialData::piecewise: breakpoints must be sorted");
  InitialData d;
  d.breaks_ = std::move(breakpoints);
  d.vals_ = std::move(values);
  return d;
}

double InitialData::eval(double x) const {
  if (!is_piecewise()) return f_(x);
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (x >= breaks_[i] && x < breaks_[i + 1]) return vals_[i];
  return vals_.back();
}

std::vector<double> InitialData::project(const Grid& grid) const {
  const int n = grid.n_cells();
  const double dx = grid.dx();
  std::vector<double> avg(n, 0.0);

  if (is_piecewise()) {
    if (breaks_.front() > grid.x_min() || breaks_.back() < grid.x_max())
      throw invalid_parameter("InitialData: piecewise data does not cover the domain");
    for (int j = 0; j < n; ++j) {
      const double xl = grid.x_min() + j * dx;
      const double xr = xl + dx;
      double acc = 0.0;
      for (std::size_t i = 0; i < vals_.size(); ++i) {
        const double overlap = std::min(xr, breaks_[i + 1]) - std::max(xl, breaks_[i]);
        if (overlap > 0.0) acc += vals_[i] * overlap;
      }
      avg[j] = acc / dx;
    }
    return avg;
  }

  for (int j = 0; j < n; ++j) {
    const double xc = grid.center(j);
    double acc = 0.0;
    for (int q = 0; q < 5; ++q) acc += kGlWeight[q] * f_(xc + 0.5 * dx * kGlNode[q]);
    avg[j] = 0.5 * acc;
  }
  return avg;
}

State project_initial_data(const std::vector<InitialData>& rho0, const Grid& grid) {
  State s;
  s.t = 0.0;
  s.values.reserve(rho0.size());
  for (const auto& d : rho0) s.values.push_back(d.project(grid));
  return s;
}

State project_initial_data(const InitialData& rho0, const Grid& grid) {
  return project_initial_data(std::vector<InitialData>{rho0}, grid);
}

}  // namespace nlcu
