#include "nlcu/convergence.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "nlcu/errors.hpp"

namespace nlcu {

double l1_error(const State& coarse, const State& reference, const Grid& coarse_grid,
                const Grid& reference_grid) {
  const int nc = coarse_grid.n_cells();
  const int nr = reference_grid.n_cells();
  if (nr % nc != 0)
    throw invalid_parameter("l1_error: reference grid must be an integer refinement (" +
                            std::to_string(nr) + " vs " + std::to_string(nc) + " cells)");
  if (coarse.n_components() != reference.n_components())
    throw invalid_parameter("l1_error: component count mismatch");
  const int ratio = nr / nc;

  double err = 0.0;
  for (int k = 0; k < coarse.n_components(); ++k) {
    for (int j = 0; j < nc; ++j) {
      double block = 0.0;
      for (int i = 0; i < ratio; ++i) block += reference.values[k][j * ratio + i];
      err += std::abs(coarse.values[k][j] - block / ratio);
    }
  }
  return err * coarse_grid.dx();
}

namespace {

State final_state(const Scenario& scenario, int level, Scheme scheme, double theta,
                  double cfl_safety) {
  const Problem problem = build_problem(scenario, level);
  SchemeConfig config{scheme, cfl_safety, theta, scenario.t_final};
  RunResult r = run(problem, config);
  return r.snapshots.back();
}

}  // namespace

ConvergenceReport convergence_study(const Scenario& scenario, const std::vector<Scheme>& schemes,
                                    int n_levels, int reference_level, double theta,
                                    const std::map<Scheme, double>* cfl_overrides) {
  if (n_levels < 1) throw invalid_parameter("convergence_study: need at least one level");
  if (reference_level < n_levels)
    throw invalid_parameter("convergence_study: reference level must exceed the finest level");

  ConvergenceReport report;
  report.scenario = scenario.name;
  report.reference_level = reference_level;
  report.t_final = scenario.t_final;
  report.schemes = schemes;
  for (int n = 0; n < n_levels; ++n) {
    report.levels.push_back(n);
    report.dxs.push_back((scenario.x_max - scenario.x_min) / (scenario.base_cells << n));
  }

  auto safety_for = [&](Scheme s) {
    if (cfl_overrides) {
      auto it = cfl_overrides->find(s);
      if (it != cfl_overrides->end()) return it->second;
    }
    return default_cfl_safety(s);
  };

  auto ref_future = std::async(std::launch::async, [&] {
    return final_state(scenario, reference_level, Scheme::cu2, theta,
                       safety_for(Scheme::cu2));
  });

  std::map<Scheme, std::vector<std::future<State>>> runs;
  for (Scheme s : schemes) {
    auto& per_level = runs[s];
    for (int n = 0; n < n_levels; ++n) {
      per_level.push_back(std::async(std::launch::async, [&scenario, s, n, theta, &safety_for] {
        return final_state(scenario, n, s, theta, safety_for(s));
      }));
    }
  }

  const State reference = ref_future.get();
  const Grid ref_grid(scenario.x_min, scenario.x_max, scenario.base_cells << reference_level);

  for (Scheme s : schemes) {
    report.cfl_safety[s] = safety_for(s);
    auto& errs = report.errors[s];
    auto& rates = report.rates[s];
    for (int n = 0; n < n_levels; ++n) {
      const State sol = runs[s][static_cast<std::size_t>(n)].get();
      const Grid grid(scenario.x_min, scenario.x_max, scenario.base_cells << n);
      errs.push_back(l1_error(sol, reference, grid, ref_grid));
      rates.push_back(n == 0 ? std::numeric_limits<double>::quiet_NaN()
                             : std::log2(errs[n - 1] / errs[n]));
    }
  }
  return report;
}

}  // namespace nlcu
