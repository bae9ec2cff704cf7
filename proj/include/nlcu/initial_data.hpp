#pragma once

#include <functional>
#include <vector>

#include "nlcu/grid.hpp"
#include "nlcu/models.hpp"

namespace nlcu {

/// Initial datum for one component. Smooth data are projected to cell
/// averages by 5-point Gauss-Legendre per cell; piecewise-constant data by
/// exact overlap splitting, so interface-aligned jumps project exactly.
class InitialData {
 public:
  static InitialData smooth(std::function<double(double)> f);

  // values[i] on [breakpoints[i], breakpoints[i+1]); breakpoints must be
  // strictly increasing and cover the grid domain.
  static InitialData piecewise(std::vector<double> breakpoints, std::vector<double> values);

  std::vector<double> project(const Grid& grid) const;
  bool is_piecewise() const { return !vals_.empty(); }

  double eval(double x) const;  // pointwise value (right-continuous for jumps)

 private:
  std::function<double(double)> f_;
  std::vector<double> breaks_, vals_;
};

State project_initial_data(const std::vector<InitialData>& rho0, const Grid& grid);
State project_initial_data(const InitialData& rho0, const Grid& grid);

}  // namespace nlcu
