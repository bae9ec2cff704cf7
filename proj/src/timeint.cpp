#include "nlcu/timeint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "nlcu/errors.hpp"

namespace nlcu {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::cu1: return "cu1";
    case Scheme::cu2: return "cu2";
    case Scheme::godunov1: return "godunov1";
    case Scheme::kt: return "kt";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  for (Scheme s : {Scheme::cu1, Scheme::cu2, Scheme::godunov1, Scheme::kt})
    if (scheme_name(s) == name) return s;
  throw invalid_parameter("unknown scheme '" + name + "' (valid: cu1, cu2, godunov1, kt)");
}

std::vector<std::string> scheme_names() { return {"cu1", "cu2", "godunov1", "kt"}; }

double default_cfl_safety(Scheme s) { return s == Scheme::kt ? 0.9 : 1.0; }

namespace {

double cfl_bound(const SystemModel& model, const KernelWeights& weights, double safety,
                 bool second_order) {
  if (!(safety > 0.0 && safety <= 1.0))
    throw invalid_parameter("cfl bound: safety factor must lie in (0, 1]");
  const double g0 = weights.gamma0();
  double dt = std::numeric_limits<double>::infinity();
  for (const auto& m : model.components) {
    double denom;
    if (second_order) {
      denom = 2.0 * (m.norm_g() * m.norm_v_prime() * g0 + m.norm_g_prime() * m.norm_v());
    } else {
      const double rho_norm =
          std::max(std::abs(m.interval().lo), std::abs(m.interval().hi));
      denom = (2.0 * m.norm_g_prime() * rho_norm + m.norm_g()) * m.norm_v_prime() * g0 +
              4.0 * m.norm_g_prime() * m.norm_v();
    }
    dt = std::min(dt, denom > 0.0 ? safety * weights.dx / denom : safety * weights.dx);
  }
  return dt;
}

}  // namespace

double cfl_dt_first_order(const SystemModel& model, const KernelWeights& weights, double safety) {
  return cfl_bound(model, weights, safety, false);
}

double cfl_dt_second_order(const SystemModel& model, const KernelWeights& weights,
                           double safety) {
  return cfl_bound(model, weights, safety, true);
}

State euler_step(const State& state, const RhsFn& rhs, double dt) {
  const auto r = rhs(state);
  State next = state;
  next.t = state.t + dt;
  for (std::size_t k = 0; k < next.values.size(); ++k)
    for (std::size_t j = 0; j < next.values[k].size(); ++j)
      next.values[k][j] += dt * r[k][j];
  return next;
}

State ssp_rk2_step(const State& state, const RhsFn& rhs, double dt) {
  State stage = euler_step(state, rhs, dt);
  const auto r1 = rhs(stage);
  State next = state;
  next.t = state.t + dt;
  for (std::size_t k = 0; k < next.values.size(); ++k)
    for (std::size_t j = 0; j < next.values[k].size(); ++j)
      next.values[k][j] =
          0.5 * state.values[k][j] + 0.5 * (stage.values[k][j] + dt * r1[k][j]);
  return next;
}

std::vector<double> component_masses(const State& state, const Grid& grid) {
  std::vector<double> m(state.n_components(), 0.0);
  for (int k = 0; k < state.n_components(); ++k) {
    double acc = 0.0;
    for (double x : state.values[k]) acc += x;
    m[k] = acc * grid.dx();
  }
  return m;
}

RunResult run(const Problem& problem, const SchemeConfig& config,
              const std::vector<double>& snapshot_times) {
  if (config.t_final < 0.0) throw invalid_parameter("run: t_final must be nonnegative");
  const double T = config.t_final;

  // targets we must land on exactly
  std::set<double> targets(snapshot_times.begin(), snapshot_times.end());
  targets.insert(T);
  for (double s : targets)
    if (s < 0.0 || s > T + 1e-14 * std::max(1.0, T))
      throw invalid_parameter("run: snapshot time outside [0, t_final]");

  State state = problem.initial;
  RunResult res;
  const int N = state.n_components();
  res.min_value.assign(N, std::numeric_limits<double>::infinity());
  res.max_value.assign(N, -std::numeric_limits<double>::infinity());

  auto record = [&](double dt_used) {
    res.mass_history.push_back(component_masses(state, problem.grid));
    res.time_history.push_back(state.t);
    res.dt_history.push_back(dt_used);
    for (int k = 0; k < N; ++k) {
      const auto [mn, mx] = std::minmax_element(state.values[k].begin(), state.values[k].end());
      res.min_value[k] = std::min(res.min_value[k], *mn);
      res.max_value[k] = std::max(res.max_value[k], *mx);
    }
  };
  record(0.0);
  if (targets.count(state.t)) res.snapshots.push_back(state);

  const bool second_order = config.scheme == Scheme::cu2;
  const FluxScheme fs =
      config.scheme == Scheme::godunov1 ? FluxScheme::godunov : FluxScheme::cu;
  RhsFn rhs;
  double dt_semidiscrete = 0.0;
  if (config.scheme != Scheme::kt) {
    dt_semidiscrete = second_order
                          ? cfl_dt_second_order(problem.model, problem.weights, config.cfl_safety)
                          : cfl_dt_first_order(problem.model, problem.weights, config.cfl_safety);
    rhs = [&](const State& s) {
      return semidiscrete_rhs(s, problem.grid, problem.weights, problem.model, fs,
                              second_order ? 2 : 1, config.theta);
    };
  }
  KtOptions kt_opts;
  kt_opts.theta = config.theta;

  const double t_eps = 1e-14 * std::max(1.0, T);
  while (state.t < T - t_eps) {
    const double next_target = *targets.upper_bound(state.t);
    double dt = config.scheme == Scheme::kt
                    ? kt_cfl_dt(state, problem.grid, problem.model, problem.weights,
                                config.cfl_safety, config.theta)
                    : dt_semidiscrete;
    bool lands = false;
    if (state.t + dt >= next_target - t_eps) {
      dt = next_target - state.t;
      lands = true;
    }

    switch (config.scheme) {
      case Scheme::kt:
        state = kt_step(state, problem.grid, problem.kernel, problem.weights, problem.model, dt,
                        kt_opts);
        break;
      case Scheme::cu2:
        state = ssp_rk2_step(state, rhs, dt);
        break;
      default:
        state = euler_step(state, rhs, dt);
    }
    if (lands) state.t = next_target;
    ++res.steps;

    if (!state.all_finite())
      throw numerical_failure("run: non-finite state after step " + std::to_string(res.steps) +
                              " at t=" + std::to_string(state.t) + " (" +
                              scheme_name(config.scheme) + ")");
    record(dt);
    if (lands) res.snapshots.push_back(state);
  }

  if (res.snapshots.empty() || res.snapshots.back().t != state.t)
    res.snapshots.push_back(state);  // t_final == 0 keeps the initial state
  return res;
}

}  // namespace nlcu
