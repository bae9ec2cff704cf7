#include "nlcu/flux.hpp"

#include <algorithm>
#include <cmath>

#include "nlcu/convolve.hpp"
#include "nlcu/errors.hpp"
#include "nlcu/reconstruct.hpp"

namespace nlcu {

SpeedPair local_speeds(double a, double b, double R, const ScalarModel& model) {
  const double vr = model.v(R);
  const double ga = model.g_prime(a);
  const double gb = model.g_prime(b);
  SpeedPair c;
  c.plus = std::max({ga, gb, 0.0}) * vr;
  c.minus = std::min({ga, gb, 0.0}) * vr;
  return c;
}

double speed_epsilon(const ScalarModel& model) {
  return 1e-14 * std::max(1.0, model.norm_g_prime() * model.norm_v());
}

double cu_flux(double a, double b, double R, const ScalarModel& model) {
  const SpeedPair c = local_speeds(a, b, R, model);
  const double vr = model.v(R);
  if (c.spread() <= speed_epsilon(model)) {
    if (c.plus > 0.0) return model.g(a) * vr;
    if (c.minus < 0.0) return model.g(b) * vr;
    return 0.5 * (model.g(a) + model.g(b)) * vr;
  }
  const double Fa = model.g(a) * vr;
  const double Fb = model.g(b) * vr;
  const double spread = c.spread();
  const double rho_star = (c.plus * b - c.minus * a - (Fb - Fa)) / spread;
  const double d = minmod(b - rho_star, rho_star - a);
  return (c.plus * Fa - c.minus * Fb) / spread + c.plus * c.minus * (b - a - d) / spread;
}

namespace {

// interior root of g' on [lo, hi] by bisection; g' is monotone for
// convex/concave g so a sign change brackets the extremum
double critical_point(const ScalarModel& model, double lo, double hi) {
  if (model.g_critical()) return std::clamp(*model.g_critical(), lo, hi);
  double flo = model.g_prime(lo), fhi = model.g_prime(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) return std::abs(flo) < std::abs(fhi) ? lo : hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = model.g_prime(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

double g_min_on(const ScalarModel& model, double lo, double hi) {
  if (model.g_monotone_nonneg()) return model.g(lo);
  if (model.g_shape() == GShape::concave) return std::min(model.g(lo), model.g(hi));
  const double gl = model.g_prime(lo), gh = model.g_prime(hi);
  if (gl >= 0.0) return model.g(lo);
  if (gh <= 0.0) return model.g(hi);
  return model.g(critical_point(model, lo, hi));
}

double g_max_on(const ScalarModel& model, double lo, double hi) {
  if (model.g_monotone_nonneg()) return model.g(hi);
  if (model.g_shape() == GShape::convex) return std::max(model.g(lo), model.g(hi));
  const double gl = model.g_prime(lo), gh = model.g_prime(hi);
  if (gl <= 0.0) return model.g(lo);
  if (gh >= 0.0) return model.g(hi);
  return model.g(critical_point(model, lo, hi));
}

}  // namespace

double godunov_flux(double a, double b, double R, const ScalarModel& model) {
  const double vr = model.v(R);
  if (a <= b) return vr * g_min_on(model, a, b);
  return vr * g_max_on(model, b, a);
}

InterfaceFlux interface_fluxes(const std::vector<double>& left_values,
                               const std::vector<double>& right_values,
                               const std::vector<double>& convolutions, const ScalarModel& model,
                               FluxScheme scheme) {
  const std::size_t n = left_values.size();
  if (right_values.size() != n || convolutions.size() != n)
    throw invalid_parameter("interface_fluxes: array length mismatch");
  InterfaceFlux out;
  out.value.resize(n);
  out.speeds.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = left_values[j], b = right_values[j], R = convolutions[j];
    out.speeds[j] = local_speeds(a, b, R, model);
    out.value[j] =
        scheme == FluxScheme::cu ? cu_flux(a, b, R, model) : godunov_flux(a, b, R, model);
  }
  return out;
}

std::vector<std::vector<double>> semidiscrete_rhs(const State& state, const Grid& grid,
                                                  const KernelWeights& weights,
                                                  const SystemModel& model, FluxScheme scheme,
                                                  int order, double theta, RhsDiagnostics* diag) {
  const int N = model.n_components();
  const int n = grid.n_cells();
  if (state.n_components() != N)
    throw invalid_parameter("semidiscrete_rhs: component count mismatch");
  if (order != 1 && order != 2) throw invalid_parameter("semidiscrete_rhs: order must be 1 or 2");

  // all convolutions come from the same state snapshot, before any flux work
  std::vector<Reconstruction> recon(N);
  std::vector<std::vector<double>> conv(N);
  std::vector<double> zero(n, 0.0);
  for (int k = 0; k < N; ++k) {
    const auto& values = state.values[k];
    std::vector<double> slopes =
        order == 2 ? compute_slopes(values, grid, theta) : zero;
    conv[k] = convolve_interfaces(values, weights, order == 2 ? &slopes : nullptr, grid);
    recon[k] = interface_values(values, slopes, grid);

    if (diag) {
      const Interval& I = model.components[k].interval();
      for (double x : values) {
        const double excess = std::max(I.lo - x, x - I.hi);
        if (excess > 0.0) {
          ++diag->out_of_interval_cells;
          diag->worst_violation = std::max(diag->worst_violation, excess);
        }
      }
    }
  }

  std::vector<std::vector<double>> rhs(N, std::vector<double>(n));
  for (int k = 0; k < N; ++k) {
    const InterfaceFlux F = interface_fluxes(recon[k].left_values, recon[k].right_values,
                                             conv[k], model.components[k], scheme);
    for (int j = 0; j < n; ++j) {
      rhs[k][j] = -(F.value[j] - F.value[grid.wrap(j - 1)]) / grid.dx();
    }
  }

  if (model.has_source()) {
    std::vector<double> rho_j(N), R_j(N);
    for (int j = 0; j < n; ++j) {
      const int jm = grid.wrap(j - 1);
      for (int k = 0; k < N; ++k) {
        rho_j[k] = state.values[k][j];
        R_j[k] = 0.5 * (conv[k][jm] + conv[k][j]);  // cell-centered convolution
      }
      const std::vector<double> S = model.source(rho_j, R_j);
      for (int k = 0; k < N; ++k) rhs[k][j] += S[k];
    }
  }
  return rhs;
}

std::vector<double> semidiscrete_rhs(const State& state, const Grid& grid,
                                     const KernelWeights& weights, const ScalarModel& model,
                                     FluxScheme scheme, int order, double theta,
                                     RhsDiagnostics* diag) {
  SystemModel sys;
  sys.components.push_back(model);
  auto rhs = semidiscrete_rhs(state, grid, weights, sys, scheme, order, theta, diag);
  return std::move(rhs[0]);
}

}  // namespace nlcu
