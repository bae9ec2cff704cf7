#include "nlcu/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nlcu {

namespace {

// Fallback norm bound: supremum over 1e4 uniform samples, inflated by 1%.
double sampled_sup(const ScalarModel::Fn& f, Interval I) {
  constexpr int kSamples = 10000;
  double m = 0.0;
  if (I.width() <= 0.0) return std::abs(f(I.lo)) * 1.01;
  for (int i = 0; i <= kSamples; ++i) {
    double x = I.lo + I.width() * static_cast<double>(i) / kSamples;
    m = std::max(m, std::abs(f(x)));
  }
  return m * 1.01;
}

}  // namespace

ScalarModel::ScalarModel(Fn g, Fn g_prime, Fn v, Fn v_prime, Interval interval, GShape shape,
                         bool g_monotone_nonneg)
    : g_(std::move(g)),
      gp_(std::move(g_prime)),
      v_(std::move(v)),
      vp_(std::move(v_prime)),
      interval_(interval),
      shape_(shape),
      g_monotone_nonneg_(g_monotone_nonneg) {
  refresh_norms();
}

void ScalarModel::refresh_norms() {
  norm_g_ = norm_g_fn_ ? norm_g_fn_(interval_) : sampled_sup(g_, interval_);
  norm_gp_ = norm_gp_fn_ ? norm_gp_fn_(interval_) : sampled_sup(gp_, interval_);
  norm_v_ = norm_v_fn_ ? norm_v_fn_(interval_) : sampled_sup(v_, interval_);
  norm_vp_ = norm_vp_fn_ ? norm_vp_fn_(interval_) : sampled_sup(vp_, interval_);

  // sampled check of the model hypotheses on I: g >= 0, v >= 0, v' <= 0
  constexpr int kProbe = 256;
  for (int i = 0; i <= kProbe; ++i) {
    const double x = interval_.lo + interval_.width() * static_cast<double>(i) / kProbe;
    if (g_(x) < -1e-12 || v_(x) < -1e-12 || vp_(x) > 1e-12)
      throw invalid_parameter("ScalarModel: hypotheses g >= 0, v >= 0, v' <= 0 fail near rho=" +
                              std::to_string(x));
  }
}

ScalarModel ScalarModel::with_interval(Interval I) const {
  if (!(I.hi >= I.lo)) throw invalid_parameter("ScalarModel: empty invariant interval");
  ScalarModel m = *this;
  m.interval_ = I;
  m.refresh_norms();
  return m;
}

ScalarModel ScalarModel::with_norm_bounds(NormFn g, NormFn gp, NormFn v, NormFn vp) const {
  ScalarModel m = *this;
  m.norm_g_fn_ = std::move(g);
  m.norm_gp_fn_ = std::move(gp);
  m.norm_v_fn_ = std::move(v);
  m.norm_vp_fn_ = std::move(vp);
  m.refresh_norms();
  return m;
}

ScalarModel ScalarModel::with_g_critical(double rho_c) const {
  ScalarModel m = *this;
  m.g_critical_ = rho_c;
  return m;
}

bool State::all_finite() const {
  for (const auto& comp : values)
    for (double x : comp)
      if (!std::isfinite(x)) return false;
  return true;
}

SystemModel make_scalar_system(ScalarModel m) {
  SystemModel s;
  s.components.push_back(std::move(m));
  return s;
}

ScalarModel make_arrhenius_model() {
  ScalarModel m(
      [](double rho) { return rho * (1.0 - rho); }, [](double rho) { return 1.0 - 2.0 * rho; },
      [](double r) { return std::exp(-r); }, [](double r) { return -std::exp(-r); },
      Interval{0.0, 1.0}, GShape::concave, /*g_monotone_nonneg=*/false);
  // closed-form sup norms over I subset of [0, 1]
  auto norm_g = [](Interval I) {
    double at = std::clamp(0.5, I.lo, I.hi);
    return std::max({std::abs(I.lo * (1.0 - I.lo)), std::abs(I.hi * (1.0 - I.hi)),
                     std::abs(at * (1.0 - at))});
  };
  auto norm_gp = [](Interval I) {
    return std::max(std::abs(1.0 - 2.0 * I.lo), std::abs(1.0 - 2.0 * I.hi));
  };
  auto norm_v = [](Interval I) { return std::exp(-I.lo); };
  auto norm_vp = [](Interval I) { return std::exp(-I.lo); };
  return m.with_norm_bounds(norm_g, norm_gp, norm_v, norm_vp).with_g_critical(0.5);
}

double multilane_exchange(double rho1, double rho2, double R1, double R2) {
  const double v1 = 1.0 - R1 * R1;
  const double v2 = 1.0 - R2 * R2;
  const double gap = v2 - v1;
  return gap * (v2 >= v1 ? rho1 * (1.0 - rho2) : rho2 * (1.0 - rho1));
}

SystemModel make_multilane_model() {
  auto lane = [] {
    ScalarModel m([](double rho) { return rho; }, [](double) { return 1.0; },
                  [](double r) { return 1.0 - r * r; }, [](double r) { return -2.0 * r; },
                  Interval{0.0, 1.0}, GShape::convex, /*g_monotone_nonneg=*/true);
    auto norm_g = [](Interval I) { return std::max(std::abs(I.lo), std::abs(I.hi)); };
    auto norm_gp = [](Interval) { return 1.0; };
    auto norm_v = [](Interval I) { return 1.0 - I.lo * I.lo; };
    auto norm_vp = [](Interval I) { return 2.0 * std::max(std::abs(I.lo), std::abs(I.hi)); };
    return m.with_norm_bounds(norm_g, norm_gp, norm_v, norm_vp);
  };
  SystemModel s;
  s.components = {lane(), lane()};
  s.source = [](const std::vector<double>& rho, const std::vector<double>& R) {
    const double S = multilane_exchange(rho[0], rho[1], R[0], R[1]);
    return std::vector<double>{-S, S};
  };
  return s;
}

}  // namespace nlcu
