#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlcu/initial_data.hpp"
#include "nlcu/timeint.hpp"

namespace nlcu {

/// A named experiment: model, kernel, initial data and final time on [-1, 1]
/// with periodic boundaries. `base_cells` is the level-0 grid; level n
/// refines it by 2^n. The discontinuous scenarios default to the profile
/// grids (dx = 0.02 and dx = 0.01); the smooth ones to dx = 1/20, the
/// coarsest rung of the convergence ladder.
struct Scenario {
  std::string name;
  double x_min = -1.0, x_max = 1.0;
  Kernel kernel;
  double t_final = 0.15;
  int base_cells = 40;
  SystemModel model;
  std::vector<InitialData> initial;
};

std::vector<std::string> scenario_names();
Scenario make_scenario(const std::string& name);

/// `custom` scenario assembled from flat key=value settings (model=, t_final=,
/// eta=, cells=, rho0_k_breaks=/rho0_k_values= or rho0_k_const=).
Scenario make_custom_scenario(const std::map<std::string, std::string>& config);

/// Grid, weights, projected initial state; invariant intervals are pinned to
/// the range of the projected cell averages.
Problem build_problem(const Scenario& scenario, int level);

}  // namespace nlcu
