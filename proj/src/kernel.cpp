#include "nlcu/kernel.hpp"

namespace nlcu {

Kernel make_quadratic_kernel(double eta) {
  if (!(eta > 0.0)) throw invalid_parameter("quadratic kernel: eta must be positive");
  Kernel k;
  k.eta = eta;
  k.omega = [eta](double x) { return 3.0 * (eta * eta - x * x) / (2.0 * eta * eta * eta); };
  k.antiderivative = [eta](double x) {
    return (3.0 * eta * eta * x - x * x * x) / (2.0 * eta * eta * eta);
  };
  return k;
}

Kernel make_constant_kernel(double eta) {
  if (!(eta > 0.0)) throw invalid_parameter("constant kernel: eta must be positive");
  Kernel k;
  k.eta = eta;
  k.omega = [eta](double) { return 1.0 / eta; };
  k.antiderivative = [eta](double x) { return x / eta; };
  return k;
}

}  // namespace nlcu
