#pragma once

#include "nlcu/errors.hpp"

namespace nlcu {

/// Uniform periodic 1D mesh on [x_min, x_max].
///
/// Cell j covers [x_min + j*dx, x_min + (j+1)*dx); interface j is the right
/// edge of cell j and separates cells j and j+1 (mod n_cells).
class Grid {
 public:
  Grid(double x_min, double x_max, int n_cells)
      : x_min_(x_min), x_max_(x_max), n_cells_(n_cells) {
    if (n_cells <= 0) throw invalid_parameter("Grid: n_cells must be positive");
    if (!(x_max > x_min)) throw invalid_parameter("Grid: need x_max > x_min");
    dx_ = (x_max - x_min) / n_cells;
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int n_cells() const { return n_cells_; }
  double dx() const { return dx_; }

  double center(int j) const { return x_min_ + (j + 0.5) * dx_; }
  double interface(int j) const { return x_min_ + (j + 1.0) * dx_; }

  // periodic cell index
  int wrap(int j) const {
    int m = j % n_cells_;
    return m < 0 ? m + n_cells_ : m;
  }

 private:
  double x_min_, x_max_;
  int n_cells_;
  double dx_;
};

}  // namespace nlcu
