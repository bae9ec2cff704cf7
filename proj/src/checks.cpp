#include "nlcu/checks.hpp"

#include <cmath>
#include <random>

#include "nlcu/flux.hpp"
#include "nlcu/kernel.hpp"
#include "nlcu/reconstruct.hpp"
#include "nlcu/weights.hpp"

namespace nlcu {

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  double in(const Interval& I) {
    std::uniform_real_distribution<double> d(I.lo, I.hi);
    return d(rng);
  }
};

double divided_flux(const ScalarModel& m, double a, double b, double R) {
  return cu_flux(a, b, R, m) / m.v(R);
}

}  // namespace

CheckResult check_flux_consistency(const ScalarModel& model, int samples, std::uint64_t seed) {
  Sampler s(seed);
  const Interval I = model.interval();
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double rho = s.in(I);
    const double R = s.in(I);
    const double exact = model.g(rho) * model.v(R);
    const double got = cu_flux(rho, rho, R, model);
    const double rel = std::abs(got - exact) / std::max(1e-300, std::abs(exact));
    worst = std::max(worst, rel);
  }
  return {"flux consistency F(rho,rho)=g(rho)v(R)", worst <= 1e-14, worst, ""};
}

CheckResult check_flux_factorization(const ScalarModel& model, int samples, std::uint64_t seed) {
  Sampler s(seed);
  const Interval I = model.interval();
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = s.in(I), b = s.in(I);
    const double R1 = s.in(I), R2 = s.in(I);
    const double g1 = divided_flux(model, a, b, R1);
    const double g2 = divided_flux(model, a, b, R2);
    worst = std::max(worst, std::abs(g1 - g2) / std::max(1.0, std::abs(g1)));
  }
  return {"flux factorization G independent of R", worst <= 1e-12, worst, ""};
}

CheckResult check_flux_monotonicity(const ScalarModel& model, int samples, std::uint64_t seed) {
  Sampler s(seed);
  const Interval I = model.interval();
  const double h = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double a = s.in(I), b = s.in(I);
    const double R = s.in(I);
    a = std::min(a, I.hi - h);
    b = std::min(b, I.hi - h);
    const double base = divided_flux(model, a, b, R);
    const double da = divided_flux(model, a + h, b, R) - base;   // want >= 0
    const double db = divided_flux(model, a, b + h, R) - base;   // want <= 0
    worst = std::max({worst, -da, db});
  }
  return {"flux monotonicity (non-decr in a, non-incr in b)", worst <= 1e-10, worst, ""};
}

CheckResult check_flux_lipschitz(const ScalarModel& model, int samples, std::uint64_t seed) {
  Sampler s(seed);
  const Interval I = model.interval();
  const double L = 2.0 * model.norm_g_prime();
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = s.in(I), b = s.in(I), R = s.in(I);
    const double gab = divided_flux(model, a, b, R);
    const double gbb = divided_flux(model, b, b, R);
    const double gaa = divided_flux(model, a, a, R);
    const double bound = L * std::abs(a - b) + 1e-9;
    worst = std::max({worst, std::abs(gab - gbb) - bound, std::abs(gab - gaa) - bound});
  }
  return {"flux Lipschitz bounds with constant 2|g'|", worst <= 0.0, worst, ""};
}

CheckResult check_antidiffusion_bound(const ScalarModel& model, int samples, std::uint64_t seed) {
  Sampler s(seed);
  const Interval I = model.interval();
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = s.in(I), b = s.in(I), R = s.in(I);
    const SpeedPair c = local_speeds(a, b, R, model);
    if (c.spread() <= speed_epsilon(model)) continue;
    const double vr = model.v(R);
    const double rho_star =
        (c.plus * b - c.minus * a - (model.g(b) * vr - model.g(a) * vr)) / c.spread();
    const double d = minmod(b - rho_star, rho_star - a);
    worst = std::max(worst, std::abs(d) - std::abs(b - a));
  }
  return {"anti-diffusion |d| <= |b - a|", worst <= 1e-12, worst, ""};
}

CheckResult check_godunov_reduction(const ScalarModel& model, int samples, std::uint64_t seed) {
  Sampler s(seed);
  const Interval I = model.interval();
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = s.in(I), b = s.in(I), R = s.in(I);
    const double upwind = model.g(a) * model.v(R);
    const double cu = cu_flux(a, b, R, model);
    worst = std::max(worst, std::abs(cu - upwind) / std::max(1e-300, std::abs(upwind)));
  }
  return {"Godunov/Upwind reduction for g' >= 0", worst <= 1e-14, worst, ""};
}

CheckResult check_weight_sums(const std::vector<double>& dxs) {
  double worst = 0.0;
  for (const Kernel& kernel : {make_quadratic_kernel(0.2), make_constant_kernel(0.2)}) {
    for (double dx : dxs) {
      const KernelWeights w = compute_kernel_weights(kernel, dx);
      double sum = 0.0;
      for (int k = 0; k < w.n_eta; ++k) sum += w.gamma[k];
      if (w.integer_ratio) {
        worst = std::max(worst, std::abs(sum - 1.0));
        worst = std::max(worst, std::abs(w.gamma[w.n_eta]));
      } else {
        worst = std::max(worst, std::abs(sum + w.gamma[w.n_eta] - 1.0));
      }
    }
  }
  return {"kernel weight sums equal 1", worst <= 1e-12, worst, ""};
}

CheckResult check_source_antisymmetry(int samples, std::uint64_t seed) {
  Sampler s(seed);
  const SystemModel m = make_multilane_model();
  const Interval I{0.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const std::vector<double> rho{s.in(I), s.in(I)};
    const std::vector<double> R{s.in(I), s.in(I)};
    const auto S = m.source(rho, R);
    worst = std::max(worst, std::abs(S[0] + S[1]));
  }
  return {"multilane source sums to zero", worst == 0.0, worst, ""};
}

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  const ScalarModel arr = make_arrhenius_model().with_interval({0.1, 0.9});
  const ScalarModel lane = make_multilane_model().components[0];
  std::vector<CheckResult> out;
  out.push_back(check_flux_consistency(arr, 1000, seed));
  out.push_back(check_flux_factorization(arr, 1000, seed + 1));
  out.push_back(check_flux_monotonicity(arr, 1000, seed + 2));
  out.push_back(check_flux_lipschitz(arr, 1000, seed + 3));
  out.push_back(check_antidiffusion_bound(arr, 1000, seed + 4));
  out.push_back(check_godunov_reduction(lane, 10000, seed + 5));
  out.push_back(check_weight_sums({0.1, 0.05, 0.025, 0.0125}));
  out.push_back(check_source_antisymmetry(1000, seed + 6));
  return out;
}

}  // namespace nlcu
