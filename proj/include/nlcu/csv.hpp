#pragma once

#include <string>
#include <vector>

#include "nlcu/convergence.hpp"
#include "nlcu/timeint.hpp"

namespace nlcu {

/// 17-significant-digit decimal formatting (round-trip exact for doubles).
std::string format_sig17(double v);

/// header `x,rho_1[,rho_2...]`, one row per cell center
void emit_solution_csv(const State& state, const Grid& grid, const std::string& path);

/// header `step,t,dt,mass_1[,mass_2,mass_total]`
void emit_mass_log_csv(const RunResult& result, const std::string& path);

/// `# key=value` metadata lines, then `scheme,n,dx,l1_error,rate` rows
void emit_convergence_csv(const ConvergenceReport& report, const std::string& path);

std::string render_convergence_table(const ConvergenceReport& report);

}  // namespace nlcu
