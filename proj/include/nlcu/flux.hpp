#pragma once

#include <vector>

#include "nlcu/grid.hpp"
#include "nlcu/models.hpp"
#include "nlcu/weights.hpp"

namespace nlcu {

struct SpeedPair {
  double plus = 0.0;   // >= 0
  double minus = 0.0;  // <= 0
  double spread() const { return plus - minus; }
};

/// One-sided speed estimates at an interface with the nonlocal term frozen:
/// c+ = max(g'(a), g'(b), 0) v(R), c- = min(g'(a), g'(b), 0) v(R).
SpeedPair local_speeds(double a, double b, double R, const ScalarModel& model);

/// Degenerate-speed threshold for the central-upwind formulas.
double speed_epsilon(const ScalarModel& model);

/// Central-upwind flux with built-in anti-diffusion, nonlocal term frozen at
/// the interface. a and b are the left and right interface values.
double cu_flux(double a, double b, double R, const ScalarModel& model);

/// Godunov flux for rho -> g(rho) v(R) with R frozen: v(R) min g over [a, b]
/// for a <= b, v(R) max g over [b, a] otherwise; extrema located through the
/// convex/concave shape of g.
double godunov_flux(double a, double b, double R, const ScalarModel& model);

enum class FluxScheme { cu, godunov };

/// Numerical flux and speed estimates at every interface of one component.
struct InterfaceFlux {
  std::vector<double> value;
  std::vector<SpeedPair> speeds;
};

InterfaceFlux interface_fluxes(const std::vector<double>& left_values,
                               const std::vector<double>& right_values,
                               const std::vector<double>& convolutions, const ScalarModel& model,
                               FluxScheme scheme);

struct RhsDiagnostics {
  long out_of_interval_cells = 0;
  double worst_violation = 0.0;
};

/// Semi-discrete right-hand side -(F_{j+1/2} - F_{j-1/2})/dx (+ source),
/// assembled component-wise; order 1 uses the piecewise-constant
/// reconstruction, order 2 the minmod-limited linear one.
std::vector<std::vector<double>> semidiscrete_rhs(const State& state, const Grid& grid,
                                                  const KernelWeights& weights,
                                                  const SystemModel& model, FluxScheme scheme,
                                                  int order, double theta,
                                                  RhsDiagnostics* diag = nullptr);

std::vector<double> semidiscrete_rhs(const State& state, const Grid& grid,
                                     const KernelWeights& weights, const ScalarModel& model,
                                     FluxScheme scheme, int order, double theta,
                                     RhsDiagnostics* diag = nullptr);

}  // namespace nlcu
