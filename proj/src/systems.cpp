#include "nlcu/systems.hpp"

#include "nlcu/errors.hpp"

namespace nlcu {

std::vector<std::vector<SpeedPair>> componentwise_speeds(
    const State& state, const std::vector<Reconstruction>& reconstructions,
    const std::vector<std::vector<double>>& convolutions, const SystemModel& model) {
  const int N = model.n_components();
  if (static_cast<int>(reconstructions.size()) != N ||
      static_cast<int>(convolutions.size()) != N || state.n_components() != N)
    throw invalid_parameter("componentwise_speeds: component count mismatch");
  const int n = state.n_cells();
  std::vector<std::vector<SpeedPair>> speeds(N, std::vector<SpeedPair>(n));
  for (int k = 0; k < N; ++k) {
    for (int j = 0; j < n; ++j) {
      speeds[k][j] = local_speeds(reconstructions[k].left_values[j],
                                  reconstructions[k].right_values[j], convolutions[k][j],
                                  model.components[k]);
    }
  }
  return speeds;
}

std::vector<std::vector<double>> system_rhs(const State& state, const Grid& grid,
                                            const KernelWeights& weights,
                                            const SystemModel& model, FluxScheme scheme,
                                            int order, double theta, RhsDiagnostics* diag) {
  return semidiscrete_rhs(state, grid, weights, model, scheme, order, theta, diag);
}

}  // namespace nlcu
