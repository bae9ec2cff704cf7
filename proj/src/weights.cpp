#include "nlcu/weights.hpp"

#include <cmath>

#include "nlcu/errors.hpp"

namespace nlcu {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  if (depth > 48)
    throw numerical_failure("compute_kernel_weights: adaptive Simpson did not converge on [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate(const Kernel& kernel, double a, double b) {
  if (b <= a) return 0.0;
  if (kernel.antiderivative) return kernel.antiderivative(b) - kernel.antiderivative(a);
  const double fa = kernel.omega(a), fb = kernel.omega(b);
  const double fm = kernel.omega(0.5 * (a + b));
  const double whole = simpson(kernel.omega, a, b, fa, fm, fb);
  return adaptive_simpson(kernel.omega, a, b, fa, fm, fb, whole, 1e-12, 0);
}

}  // namespace

bool is_integer_ratio(double eta, double dx, int* ratio_out) {
  const double ratio = eta / dx;
  const double nearest = std::round(ratio);
  const bool ok = nearest >= 1.0 && std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio);
  if (ok && ratio_out) *ratio_out = static_cast<int>(nearest);
  return ok;
}

KernelWeights compute_kernel_weights(const Kernel& kernel, double dx) {
  if (!(dx > 0.0)) throw invalid_parameter("compute_kernel_weights: dx must be positive");
  KernelWeights w;
  w.dx = dx;
  w.eta = kernel.eta;

  int ratio = 0;
  w.integer_ratio = is_integer_ratio(kernel.eta, dx, &ratio);
  w.n_eta = w.integer_ratio ? ratio : static_cast<int>(std::floor(kernel.eta / dx));

  w.gamma.assign(w.n_eta + 1, 0.0);
  for (int k = 0; k < w.n_eta; ++k) {
    // snap the last full-cell upper limit to eta for integer ratios so the
    // weights telescope to the unit integral exactly
    const double hi = (w.integer_ratio && k == w.n_eta - 1) ? kernel.eta
                                                            : std::min((k + 1) * dx, kernel.eta);
    w.gamma[k] = integrate(kernel, k * dx, hi);
  }
  if (!w.integer_ratio) w.gamma[w.n_eta] = integrate(kernel, w.n_eta * dx, kernel.eta);
  return w;
}

}  // namespace nlcu
