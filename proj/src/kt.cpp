#include "nlcu/kt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlcu/errors.hpp"
#include "nlcu/reconstruct.hpp"

namespace nlcu {

namespace {

// per-interface envelope speeds from second-order interface values
std::vector<SpeedPair> envelope_speeds(const State& state, const Grid& grid,
                                       const SystemModel& model,
                                       const std::vector<std::vector<double>>& slopes,
                                       const std::vector<std::vector<double>>& conv) {
  const int n = grid.n_cells();
  std::vector<SpeedPair> speeds(n);
  for (int k = 0; k < model.n_components(); ++k) {
    const Reconstruction r = interface_values(state.values[k], slopes[k], grid);
    for (int j = 0; j < n; ++j) {
      const SpeedPair c =
          local_speeds(r.left_values[j], r.right_values[j], conv[k][j], model.components[k]);
      speeds[j].plus = std::max(speeds[j].plus, c.plus);
      speeds[j].minus = std::min(speeds[j].minus, c.minus);
    }
  }
  return speeds;
}

double max_speed(const std::vector<SpeedPair>& speeds) {
  double m = 0.0;
  for (const auto& c : speeds) m = std::max({m, c.plus, -c.minus});
  return m;
}

double system_speed_epsilon(const SystemModel& model) {
  double e = 0.0;
  for (const auto& c : model.components) e = std::max(e, speed_epsilon(c));
  return e;
}

}  // namespace

double kt_cfl_dt(const State& state, const Grid& grid, const SystemModel& model,
                 const KernelWeights& weights, double safety, double theta) {
  if (!(safety > 0.0 && safety <= 1.0))
    throw invalid_parameter("kt_cfl_dt: safety factor must lie in (0, 1]");
  const int N = model.n_components();
  std::vector<std::vector<double>> slopes(N), conv(N);
  for (int k = 0; k < N; ++k) {
    slopes[k] = compute_slopes(state.values[k], grid, theta);
    conv[k] = convolve_interfaces(state.values[k], weights, &slopes[k], grid);
  }
  const double cmax = max_speed(envelope_speeds(state, grid, model, slopes, conv));
  if (cmax <= 0.0) return safety * grid.dx();  // stationary state
  return safety * grid.dx() / (2.0 * cmax);
}

void kt_shifted_values(const std::vector<double>& values, const std::vector<double>& slopes,
                       const std::vector<SpeedPair>& speeds, const Grid& grid, double dt,
                       std::vector<double>& out_l, std::vector<double>& out_r) {
  const int n = grid.n_cells();
  const double half = 0.5 * grid.dx();
  out_l.resize(n);
  out_r.resize(n);
  for (int j = 0; j < n; ++j) {
    const int jp = grid.wrap(j + 1);
    out_l[j] = values[j] + slopes[j] * (half + dt * speeds[j].minus);
    out_r[j] = values[jp] - slopes[jp] * (half - dt * speeds[j].plus);
  }
}

std::vector<double> kt_flux_slopes(const std::vector<double>& flux_at_points,
                                   const std::vector<SpeedPair>& speeds, const Grid& grid,
                                   double dt, Side side) {
  const int n = grid.n_cells();
  const double dx = grid.dx();
  auto shift_minus = [&](int j) { return speeds[grid.wrap(j)].minus * dt; };
  auto shift_plus = [&](int j) { return speeds[grid.wrap(j)].plus * dt; };
  std::vector<double> fx(n);
  for (int j = 0; j < n; ++j) {
    // backward denominators per family; the forward ones carry the plus
    // speeds for both families, as displayed
    const double den_back = side == Side::left
                                ? dx - shift_minus(j - 1) + shift_minus(j)
                                : dx - shift_plus(j - 1) + shift_plus(j);
    const double den_fwd = dx - shift_plus(j) + shift_plus(j + 1);
    if (den_back <= 0.0 || den_fwd <= 0.0)
      throw cfl_violation("kt_flux_slopes: nonpositive divided-difference denominator");
    const double back = (flux_at_points[j] - flux_at_points[grid.wrap(j - 1)]) / den_back;
    const double fwd = (flux_at_points[grid.wrap(j + 1)] - flux_at_points[j]) / den_fwd;
    fx[j] = minmod(back, fwd);
  }
  return fx;
}

KtPredictors kt_predictors(const std::vector<double>& shifted_values,
                           const std::vector<double>& shifted_conv,
                           const std::vector<double>& flux_slopes,
                           const std::vector<double>& conv_rate, double dt) {
  const std::size_t n = shifted_values.size();
  KtPredictors p;
  p.rho.resize(n);
  p.conv.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    p.rho[j] = shifted_values[j] - 0.5 * dt * flux_slopes[j];
    p.conv[j] = shifted_conv[j] + 0.5 * dt * conv_rate[j];
  }
  return p;
}

KtIntermediate kt_intermediate_averages(
    const std::vector<double>& values, const std::vector<double>& slopes,
    const std::vector<double>& shifted_l, const std::vector<double>& shifted_r,
    const std::vector<double>& flux_pred_l, const std::vector<double>& flux_pred_r,
    const std::vector<SpeedPair>& speeds, const Grid& grid, double dt, double eps_speed,
    bool uncorrected_averages, const std::vector<double>* source_half_l,
    const std::vector<double>* source_half_r) {
  const int n = grid.n_cells();
  const double dx = grid.dx();
  KtIntermediate out;
  out.w_mid.resize(n);
  out.w_smooth.resize(n);

  for (int j = 0; j < n; ++j) {
    const SpeedPair& c = speeds[j];
    const int jp = grid.wrap(j + 1);
    if (c.spread() <= eps_speed) {
      out.w_mid[j] = 0.5 * (shifted_l[j] + shifted_r[j]);
    } else {
      double acc = shifted_r[j] * c.plus - 0.5 * slopes[jp] * c.plus * c.plus * dt -
                   shifted_l[j] * c.minus + 0.5 * slopes[j] * c.minus * c.minus * dt -
                   (flux_pred_r[j] - flux_pred_l[j]);
      out.w_mid[j] = acc / c.spread();
      if (source_half_l) {
        out.w_mid[j] += dt * 0.5 * ((*source_half_l)[j] + (*source_half_r)[j]);
      }
    }
  }

  for (int j = 0; j < n; ++j) {
    const int jm = grid.wrap(j - 1);
    const double cp_left = speeds[jm].plus;    // c^+_{j-1/2}
    const double cm_right = speeds[j].minus;   // c^-_{j+1/2}
    const double width = dx - dt * (cp_left - cm_right);
    if (width <= 0.0)
      throw cfl_violation("kt_intermediate_averages: smooth region has nonpositive width");
    double w;
    if (uncorrected_averages) {
      // uncorrected variant: slope term lacks dt and reuses the j+1/2 speeds
      w = values[j] + 0.5 * slopes[j] * (speeds[j].plus + speeds[j].minus) -
          dt / width * (flux_pred_l[j] - flux_pred_r[jm]);
    } else {
      w = values[j] + 0.5 * dt * (cp_left + cm_right) * slopes[j] -
          dt / width * (flux_pred_l[j] - flux_pred_r[jm]);
    }
    if (source_half_l) {
      w += dt * 0.5 * ((*source_half_r)[jm] + (*source_half_l)[j]);
    }
    out.w_smooth[j] = w;
  }
  return out;
}

std::vector<double> kt_projection_slopes(const std::vector<double>& w_mid,
                                         const std::vector<double>& w_smooth,
                                         const std::vector<double>& full_rho_l,
                                         const std::vector<double>& full_rho_r,
                                         const std::vector<SpeedPair>& speeds, const Grid& grid,
                                         double dt, double eps_speed) {
  const int n = grid.n_cells();
  std::vector<double> s(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const SpeedPair& c = speeds[j];
    if (c.spread() <= eps_speed) continue;  // zero-width piece, slope 0
    const double halfwidth = 0.5 * c.spread() * dt;
    const double sj = minmod((w_mid[j] - full_rho_l[j]) / halfwidth,
                             (full_rho_r[j] - w_mid[j]) / halfwidth);
    const double lo = std::min({w_smooth[j], w_mid[j], w_smooth[grid.wrap(j + 1)]});
    const double hi = std::max({w_smooth[j], w_mid[j], w_smooth[grid.wrap(j + 1)]});
    const bool monotone = full_rho_l[j] >= lo && full_rho_l[j] <= hi && full_rho_r[j] >= lo &&
                          full_rho_r[j] <= hi;
    s[j] = monotone ? sj : 0.0;
  }
  return s;
}

State kt_step(const State& state, const Grid& grid, const Kernel& kernel,
              const KernelWeights& weights, const SystemModel& model, double dt,
              const KtOptions& options) {
  KtWorkspace ws;
  return kt_step(state, grid, kernel, weights, model, dt, options, ws);
}

State kt_step(const State& state, const Grid& grid, const Kernel& kernel,
              const KernelWeights& weights, const SystemModel& model, double dt,
              const KtOptions& options, KtWorkspace& ws) {
  const int N = model.n_components();
  const int n = grid.n_cells();
  if (state.n_components() != N) throw invalid_parameter("kt_step: component count mismatch");
  if (!is_integer_ratio(kernel.eta, grid.dx()))
    throw invalid_parameter("kt_step: requires eta/dx to be a natural number");

  auto resize = [&](std::vector<std::vector<double>>& v) {
    v.assign(N, std::vector<double>(n, 0.0));
  };
  resize(ws.slopes);
  resize(ws.conv);
  resize(ws.shifted_l);
  resize(ws.shifted_r);
  resize(ws.conv_l);
  resize(ws.conv_r);
  resize(ws.flux_slope_l);
  resize(ws.flux_slope_r);
  resize(ws.dtR_l);
  resize(ws.dtR_r);
  resize(ws.pred_rho_l);
  resize(ws.pred_rho_r);
  resize(ws.pred_conv_l);
  resize(ws.pred_conv_r);
  resize(ws.full_rho_l);
  resize(ws.full_rho_r);
  resize(ws.w_mid);
  resize(ws.w_smooth);
  resize(ws.proj_slopes);

  // slopes and the interface nonlocal terms, then envelope speeds
  for (int k = 0; k < N; ++k) {
    ws.slopes[k] = compute_slopes(state.values[k], grid, options.theta);
    ws.conv[k] = convolve_interfaces(state.values[k], weights, &ws.slopes[k], grid);
  }
  ws.speeds = envelope_speeds(state, grid, model, ws.slopes, ws.conv);

  const double cmax = max_speed(ws.speeds);
  if (cmax * dt > 0.5 * grid.dx() * (1.0 + 1e-12))
    throw cfl_violation("kt_step: dt violates the half-cell CFL bound (dt=" +
                        std::to_string(dt) + ")");

  // shifted reconstructions, shifted nonlocal terms, fluxes at split points
  for (int k = 0; k < N; ++k) {
    kt_shifted_values(state.values[k], ws.slopes[k], ws.speeds, grid, dt, ws.shifted_l[k],
                      ws.shifted_r[k]);
    for (int j = 0; j < n; ++j) {
      ws.conv_l[k][j] = convolve_shifted(state.values[k], ws.slopes[k], kernel, grid, j,
                                         ws.speeds[j].minus * dt, Side::left);
      ws.conv_r[k][j] = convolve_shifted(state.values[k], ws.slopes[k], kernel, grid, j,
                                         ws.speeds[j].plus * dt, Side::right);
    }
    nonlocal_family_counter() += 2;
  }

  // balance-law source at the split points (time level n)
  std::vector<std::vector<double>> src_n_l, src_n_r;
  if (model.has_source()) {
    src_n_l.assign(N, std::vector<double>(n));
    src_n_r.assign(N, std::vector<double>(n));
    std::vector<double> rho(N), R(N);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < N; ++k) rho[k] = ws.shifted_l[k][j], R[k] = ws.conv_l[k][j];
      const auto sl = model.source(rho, R);
      for (int k = 0; k < N; ++k) rho[k] = ws.shifted_r[k][j], R[k] = ws.conv_r[k][j];
      const auto sr = model.source(rho, R);
      for (int k = 0; k < N; ++k) src_n_l[k][j] = sl[k], src_n_r[k][j] = sr[k];
    }
  }

  for (int k = 0; k < N; ++k) {
    const ScalarModel& m = model.components[k];
    std::vector<double> phi_l(n), phi_r(n);
    for (int j = 0; j < n; ++j) {
      phi_l[j] = m.g(ws.shifted_l[k][j]) * m.v(ws.conv_l[k][j]);
      phi_r[j] = m.g(ws.shifted_r[k][j]) * m.v(ws.conv_r[k][j]);
    }
    ws.flux_slope_l[k] = kt_flux_slopes(phi_l, ws.speeds, grid, dt, Side::left);
    ws.flux_slope_r[k] = kt_flux_slopes(phi_r, ws.speeds, grid, dt, Side::right);

    // d/dt R is the balance law under the kernel: the quadrature consumes
    // F_x - S at the already-computed family points
    std::vector<double> rate_l = ws.flux_slope_l[k];
    std::vector<double> rate_r = ws.flux_slope_r[k];
    if (model.has_source()) {
      for (int j = 0; j < n; ++j) {
        rate_l[j] -= src_n_l[k][j];
        rate_r[j] -= src_n_r[k][j];
      }
    }
    for (int j = 0; j < n; ++j) {
      ws.dtR_l[k][j] = convolve_time_derivative(rate_l, kernel, grid, j,
                                                ws.speeds[j].minus * dt, Side::left);
      ws.dtR_r[k][j] = convolve_time_derivative(rate_r, kernel, grid, j,
                                                ws.speeds[j].plus * dt, Side::right);
    }
    nonlocal_family_counter() += 2;
  }

  // Taylor predictors at t^{n+1/2} and full-step values for the projection
  for (int k = 0; k < N; ++k) {
    KtPredictors pl =
        kt_predictors(ws.shifted_l[k], ws.conv_l[k], ws.flux_slope_l[k], ws.dtR_l[k], dt);
    KtPredictors pr =
        kt_predictors(ws.shifted_r[k], ws.conv_r[k], ws.flux_slope_r[k], ws.dtR_r[k], dt);
    ws.pred_rho_l[k] = std::move(pl.rho);
    ws.pred_conv_l[k] = std::move(pl.conv);
    ws.pred_rho_r[k] = std::move(pr.rho);
    ws.pred_conv_r[k] = std::move(pr.conv);
    for (int j = 0; j < n; ++j) {
      const double sl = model.has_source() ? src_n_l[k][j] : 0.0;
      const double sr = model.has_source() ? src_n_r[k][j] : 0.0;
      if (model.has_source()) {
        ws.pred_rho_l[k][j] += 0.5 * dt * sl;
        ws.pred_rho_r[k][j] += 0.5 * dt * sr;
      }
      ws.full_rho_l[k][j] = ws.shifted_l[k][j] + dt * (-ws.flux_slope_l[k][j] + sl);
      ws.full_rho_r[k][j] = ws.shifted_r[k][j] + dt * (-ws.flux_slope_r[k][j] + sr);
    }
  }

  // source at the predictors, used by the trapezoidal corrector
  std::vector<std::vector<double>> src_half_l, src_half_r;
  if (model.has_source()) {
    src_half_l.assign(N, std::vector<double>(n));
    src_half_r.assign(N, std::vector<double>(n));
    std::vector<double> rho(N), R(N);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < N; ++k) rho[k] = ws.pred_rho_l[k][j], R[k] = ws.pred_conv_l[k][j];
      const auto sl = model.source(rho, R);
      for (int k = 0; k < N; ++k) rho[k] = ws.pred_rho_r[k][j], R[k] = ws.pred_conv_r[k][j];
      const auto sr = model.source(rho, R);
      for (int k = 0; k < N; ++k) src_half_l[k][j] = sl[k], src_half_r[k][j] = sr[k];
    }
  }

  const double eps = system_speed_epsilon(model);
  State next;
  next.t = state.t + dt;
  next.values.assign(N, std::vector<double>(n));

  for (int k = 0; k < N; ++k) {
    const ScalarModel& m = model.components[k];
    std::vector<double> flux_pred_l(n), flux_pred_r(n);
    for (int j = 0; j < n; ++j) {
      flux_pred_l[j] = m.g(ws.pred_rho_l[k][j]) * m.v(ws.pred_conv_l[k][j]);
      flux_pred_r[j] = m.g(ws.pred_rho_r[k][j]) * m.v(ws.pred_conv_r[k][j]);
    }
    const KtIntermediate inter = kt_intermediate_averages(
        state.values[k], ws.slopes[k], ws.shifted_l[k], ws.shifted_r[k], flux_pred_l, flux_pred_r,
        ws.speeds, grid, dt, eps, options.uncorrected_averages,
        model.has_source() ? &src_half_l[k] : nullptr,
        model.has_source() ? &src_half_r[k] : nullptr);
    ws.w_mid[k] = inter.w_mid;
    ws.w_smooth[k] = inter.w_smooth;
    ws.proj_slopes[k] = kt_projection_slopes(inter.w_mid, inter.w_smooth, ws.full_rho_l[k],
                                             ws.full_rho_r[k], ws.speeds, grid, dt, eps);

    // project back to the original grid
    const double lam = dt / grid.dx();
    for (int j = 0; j < n; ++j) {
      const int jm = grid.wrap(j - 1);
      const SpeedPair& cl = ws.speeds[jm];
      const SpeedPair& cr = ws.speeds[j];
      double v = inter.w_smooth[j] +
                 lam * (cl.plus * (inter.w_mid[jm] - inter.w_smooth[j]) -
                        cr.minus * (inter.w_mid[j] - inter.w_smooth[j])) +
                 0.5 * dt * dt / grid.dx() *
                     (ws.proj_slopes[k][j] * cr.plus * cr.minus -
                      ws.proj_slopes[k][jm] * cl.plus * cl.minus);
      next.values[k][j] = v;
    }
  }
  return next;
}

}  // namespace nlcu
