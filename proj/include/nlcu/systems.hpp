#pragma once

#include <vector>

#include "nlcu/flux.hpp"
#include "nlcu/reconstruct.hpp"

namespace nlcu {

/// Per-component one-sided speed estimates at every interface,
/// speeds[component][interface].
std::vector<std::vector<SpeedPair>> componentwise_speeds(
    const State& state, const std::vector<Reconstruction>& reconstructions,
    const std::vector<std::vector<double>>& convolutions, const SystemModel& model);

/// Component-wise semi-discrete right-hand side with the signed lane-exchange
/// source; identical code path to the scalar assembly.
std::vector<std::vector<double>> system_rhs(const State& state, const Grid& grid,
                                            const KernelWeights& weights,
                                            const SystemModel& model, FluxScheme scheme,
                                            int order, double theta,
                                            RhsDiagnostics* diag = nullptr);

}  // namespace nlcu
