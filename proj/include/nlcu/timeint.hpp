#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlcu/flux.hpp"
#include "nlcu/grid.hpp"
#include "nlcu/kernel.hpp"
#include "nlcu/kt.hpp"
#include "nlcu/models.hpp"
#include "nlcu/weights.hpp"

namespace nlcu {

enum class Scheme { cu1, cu2, godunov1, kt };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);
std::vector<std::string> scheme_names();

/// Default CFL safety: 1.0 for the semi-discrete schemes (their bounds are
/// already convergence-safe), 0.9 for the fully-discrete scheme's half-cell
/// condition.
double default_cfl_safety(Scheme s);

/// Convergence-safe CFL bound for Euler + piecewise-constant reconstruction,
/// dt = safety * dx / [(2|g'||rho| + |g|) |v'| gamma_0 + 4 |g'||v|],
/// minimized over components.
double cfl_dt_first_order(const SystemModel& model, const KernelWeights& weights,
                          double safety = 1.0);

/// Convergence-safe CFL bound for SSP-RK2 + linear reconstruction,
/// dt = safety * dx / [2 (|g||v'| gamma_0 + |g'||v|)].
double cfl_dt_second_order(const SystemModel& model, const KernelWeights& weights,
                           double safety = 1.0);

using RhsFn = std::function<std::vector<std::vector<double>>(const State&)>;

State euler_step(const State& state, const RhsFn& rhs, double dt);

/// Heun form: u1 = u + dt f(u); u_{n+1} = u/2 + (u1 + dt f(u1))/2.
State ssp_rk2_step(const State& state, const RhsFn& rhs, double dt);

struct SchemeConfig {
  Scheme scheme = Scheme::cu1;
  double cfl_safety = 1.0;
  double theta = 1.0;
  double t_final = 0.0;
};

struct Problem {
  Grid grid;
  Kernel kernel;
  KernelWeights weights;
  SystemModel model;
  State initial;
};

struct RunResult {
  std::vector<State> snapshots;                   // requested times, final state last
  std::vector<std::vector<double>> mass_history;  // [step][component], step 0 = initial
  std::vector<double> time_history;               // per recorded step
  std::vector<double> dt_history;                 // dt_history[0] = 0 for the initial record
  std::vector<double> min_value, max_value;       // per component, over all steps
  long steps = 0;
};

/// Advance to t_final with the scheme-appropriate time step, landing exactly
/// on every snapshot time and on t_final. Aborts with a step diagnostic on
/// non-finite values.
RunResult run(const Problem& problem, const SchemeConfig& config,
              const std::vector<double>& snapshot_times = {});

std::vector<double> component_masses(const State& state, const Grid& grid);

}  // namespace nlcu
