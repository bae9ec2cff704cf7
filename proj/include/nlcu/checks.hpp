#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlcu/models.hpp"

namespace nlcu {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest observed violation (0 when clean)
  std::string detail;
};

// Sampled verifications of the flux-function conditions that guarantee
// convergence to the entropy solution, plus kernel-weight and source
// identities.

/// cu_flux(rho, rho, R) = g(rho) v(R) to 1e-14 relative
CheckResult check_flux_consistency(const ScalarModel& model, int samples, std::uint64_t seed);

/// G(a, b) = cu_flux / v(R) is independent of R
CheckResult check_flux_factorization(const ScalarModel& model, int samples, std::uint64_t seed);

/// G non-decreasing in a, non-increasing in b (finite differences, h = 1e-6,
/// slack 1e-10)
CheckResult check_flux_monotonicity(const ScalarModel& model, int samples, std::uint64_t seed);

/// |G(a,b) - G(b,b)| and |G(a,b) - G(a,a)| bounded by 2 |g'| |a-b| (slack 1e-9)
CheckResult check_flux_lipschitz(const ScalarModel& model, int samples, std::uint64_t seed);

/// anti-diffusion term bounded by |b - a|
CheckResult check_antidiffusion_bound(const ScalarModel& model, int samples, std::uint64_t seed);

/// for g' >= 0 models, cu_flux equals g(a) v(R) to 1e-14 relative
CheckResult check_godunov_reduction(const ScalarModel& model, int samples, std::uint64_t seed);

/// sum gamma = 1 to 1e-12 for integer eta/dx (quadratic and constant kernels)
CheckResult check_weight_sums(const std::vector<double>& dxs);

/// the two-lane exchange source sums to zero
CheckResult check_source_antisymmetry(int samples, std::uint64_t seed);

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed);

}  // namespace nlcu
