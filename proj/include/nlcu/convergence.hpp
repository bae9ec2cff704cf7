#pragma once

#include <map>
#include <vector>

#include "nlcu/scenario.hpp"
#include "nlcu/timeint.hpp"

namespace nlcu {

/// L1 distance between a coarse solution and a reference on an integer
/// refinement of the same domain: the reference is block-averaged onto the
/// coarse cells, then dx * sum |difference|, summed over components.
double l1_error(const State& coarse, const State& reference, const Grid& coarse_grid,
                const Grid& reference_grid);

struct ConvergenceReport {
  std::string scenario;
  int reference_level = 0;
  double t_final = 0.0;
  std::vector<int> levels;   // 0 .. n_levels-1
  std::vector<double> dxs;
  std::vector<Scheme> schemes;
  std::map<Scheme, std::vector<double>> errors;
  std::map<Scheme, std::vector<double>> rates;  // rates[0] is NaN
  std::map<Scheme, double> cfl_safety;
};

/// Errors and rates against a fine-grid reference computed once with the
/// second-order scheme at `reference_level`. Level and scheme runs are
/// independent jobs and execute concurrently.
ConvergenceReport convergence_study(const Scenario& scenario, const std::vector<Scheme>& schemes,
                                    int n_levels, int reference_level, double theta = 1.0,
                                    const std::map<Scheme, double>* cfl_overrides = nullptr);

}  // namespace nlcu
