#pragma once

#include <vector>

#include "nlcu/convolve.hpp"
#include "nlcu/flux.hpp"
#include "nlcu/grid.hpp"
#include "nlcu/models.hpp"

namespace nlcu {

struct KtOptions {
  double theta = 1.0;
  // Reproduce the uncorrected intermediate-average formulas (dimensionally
  // inconsistent); kept for demonstrating the loss of accuracy/conservation.
  bool uncorrected_averages = false;
};

/// Everything the fully-discrete step computes, per component and interface;
/// exposed so single-step tests can audit each stage.
struct KtWorkspace {
  std::vector<SpeedPair> speeds;  // envelope over components, per interface
  std::vector<std::vector<double>> slopes;                     // [comp][cell]
  std::vector<std::vector<double>> conv;                       // R_{j+1/2}
  std::vector<std::vector<double>> shifted_l, shifted_r;       // rho^n at split points
  std::vector<std::vector<double>> conv_l, conv_r;             // R^n at split points
  std::vector<std::vector<double>> flux_slope_l, flux_slope_r; // F_x
  std::vector<std::vector<double>> dtR_l, dtR_r;               // d/dt R^n
  std::vector<std::vector<double>> pred_rho_l, pred_rho_r;     // half-step Taylor values
  std::vector<std::vector<double>> pred_conv_l, pred_conv_r;
  std::vector<std::vector<double>> full_rho_l, full_rho_r;     // full-step Taylor values
  std::vector<std::vector<double>> w_mid;                      // w^{n+1}_{j+1/2}
  std::vector<std::vector<double>> w_smooth;                   // w^{n+1}_j
  std::vector<std::vector<double>> proj_slopes;                // s^{n+1}_{j+1/2}
};

/// dt = safety * dx / (2 max_j max(c+, -c-)); stationary fallback safety * dx.
double kt_cfl_dt(const State& state, const Grid& grid, const SystemModel& model,
                 const KernelWeights& weights, double safety, double theta = 1.0);

/// rho^n at x_{j+1/2} + c^- dt (left) and x_{j+1/2} + c^+ dt (right).
void kt_shifted_values(const std::vector<double>& values, const std::vector<double>& slopes,
                       const std::vector<SpeedPair>& speeds, const Grid& grid, double dt,
                       std::vector<double>& out_l, std::vector<double>& out_r);

/// Minmod flux slopes of one side family. Backward denominators span the
/// family's own split points; forward ones carry the plus speeds for both
/// families.
std::vector<double> kt_flux_slopes(const std::vector<double>& flux_at_points,
                                   const std::vector<SpeedPair>& speeds, const Grid& grid,
                                   double dt, Side side);

/// Half-step Taylor predictors rho - dt/2 F_x and R + dt/2 dR/dt.
struct KtPredictors {
  std::vector<double> rho;
  std::vector<double> conv;
};
KtPredictors kt_predictors(const std::vector<double>& shifted_values,
                           const std::vector<double>& shifted_conv,
                           const std::vector<double>& flux_slopes,
                           const std::vector<double>& conv_rate, double dt);

/// Intermediate cell averages over the non-smooth and smooth regions.
struct KtIntermediate {
  std::vector<double> w_mid;
  std::vector<double> w_smooth;
};
KtIntermediate kt_intermediate_averages(
    const std::vector<double>& values, const std::vector<double>& slopes,
    const std::vector<double>& shifted_l, const std::vector<double>& shifted_r,
    const std::vector<double>& flux_pred_l, const std::vector<double>& flux_pred_r,
    const std::vector<SpeedPair>& speeds, const Grid& grid, double dt, double eps_speed,
    bool uncorrected_averages = false, const std::vector<double>* source_half_l = nullptr,
    const std::vector<double>* source_half_r = nullptr);

/// Projection slopes over the non-smooth pieces with monotonicity enforcement
/// against (w_j, w_{j+1/2}, w_{j+1}).
std::vector<double> kt_projection_slopes(const std::vector<double>& w_mid,
                                         const std::vector<double>& w_smooth,
                                         const std::vector<double>& full_rho_l,
                                         const std::vector<double>& full_rho_r,
                                         const std::vector<SpeedPair>& speeds, const Grid& grid,
                                         double dt, double eps_speed);

/// One step of the fully-discrete second-order scheme. Requires eta/dx
/// integer and dt within the half-cell CFL bound.
State kt_step(const State& state, const Grid& grid, const Kernel& kernel,
              const KernelWeights& weights, const SystemModel& model, double dt,
              const KtOptions& options = {});
State kt_step(const State& state, const Grid& grid, const Kernel& kernel,
              const KernelWeights& weights, const SystemModel& model, double dt,
              const KtOptions& options, KtWorkspace& ws);

}  // namespace nlcu
