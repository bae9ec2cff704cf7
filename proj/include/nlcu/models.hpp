#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nlcu/errors.hpp"

namespace nlcu {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

enum class GShape { convex, concave };

/// Scalar model for d/dt rho + d/dx [ g(rho) v(omega * rho) ] = 0.
///
/// Immutable after construction; `with_interval` returns a copy with the
/// invariant interval replaced and the sup-norm bounds recomputed eagerly,
/// so instances are safe to share across threads.
class ScalarModel {
 public:
  using Fn = std::function<double(double)>;
  using NormFn = std::function<double(Interval)>;  // closed-form sup over I

  ScalarModel() = default;
  ScalarModel(Fn g, Fn g_prime, Fn v, Fn v_prime, Interval interval, GShape shape,
              bool g_monotone_nonneg);

  double g(double rho) const { return g_(rho); }
  double g_prime(double rho) const { return gp_(rho); }
  double v(double r) const { return v_(r); }
  double v_prime(double r) const { return vp_(r); }

  const Interval& interval() const { return interval_; }
  GShape g_shape() const { return shape_; }
  bool g_monotone_nonneg() const { return g_monotone_nonneg_; }

  // sup-norm bounds over the invariant interval (closed form when supplied,
  // otherwise inflated sampled suprema)
  double norm_g() const { return norm_g_; }
  double norm_g_prime() const { return norm_gp_; }
  double norm_v() const { return norm_v_; }
  double norm_v_prime() const { return norm_vp_; }

  // interior critical point of g, if known (used by the Godunov flux)
  std::optional<double> g_critical() const { return g_critical_; }

  ScalarModel with_interval(Interval I) const;
  ScalarModel with_norm_bounds(NormFn g, NormFn gp, NormFn v, NormFn vp) const;
  ScalarModel with_g_critical(double rho_c) const;

 private:
  void refresh_norms();

  Fn g_, gp_, v_, vp_;
  Interval interval_{0.0, 1.0};
  GShape shape_ = GShape::concave;
  bool g_monotone_nonneg_ = false;
  NormFn norm_g_fn_, norm_gp_fn_, norm_v_fn_, norm_vp_fn_;
  std::optional<double> g_critical_;
  double norm_g_ = 0.0, norm_gp_ = 0.0, norm_v_ = 0.0, norm_vp_ = 0.0;
};

/// Weakly coupled system: component k transports with its own g_k, v_k acting
/// on the convolution of its own density. `source`, when set, returns the
/// signed rate vector S_k(rho, R); empty for pure conservation laws.
struct SystemModel {
  std::vector<ScalarModel> components;
  std::function<std::vector<double>(const std::vector<double>& rho,
                                    const std::vector<double>& R)>
      source;

  int n_components() const { return static_cast<int>(components.size()); }
  bool has_source() const { return static_cast<bool>(source); }
};

SystemModel make_scalar_system(ScalarModel m);

/// Time-stamped cell averages, values[component][cell].
struct State {
  double t = 0.0;
  std::vector<std::vector<double>> values;

  int n_components() const { return static_cast<int>(values.size()); }
  int n_cells() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
  bool all_finite() const;
};

/// Arrhenius traffic flow: g(rho) = rho (1 - rho), v(r) = exp(-r).
ScalarModel make_arrhenius_model();

/// Two-lane model: g(rho) = rho, v(r) = 1 - r^2, antisymmetric lane-exchange
/// source driven by the nonlocal speed difference.
SystemModel make_multilane_model();

/// The scalar exchange rate used by the multilane source (lane 1 gets -S,
/// lane 2 gets +S).
double multilane_exchange(double rho1, double rho2, double R1, double R2);

}  // namespace nlcu
