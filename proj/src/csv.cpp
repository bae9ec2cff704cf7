#include "nlcu/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlcu/errors.hpp"

namespace nlcu {

std::string format_sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void emit_solution_csv(const State& state, const Grid& grid, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "x";
  for (int k = 0; k < state.n_components(); ++k) out << ",rho_" << (k + 1);
  out << "\n";
  for (int j = 0; j < grid.n_cells(); ++j) {
    out << format_sig17(grid.center(j));
    for (int k = 0; k < state.n_components(); ++k)
      out << "," << format_sig17(state.values[k][j]);
    out << "\n";
  }
  if (!out) throw io_error("write failed for '" + path + "'");
}

void emit_mass_log_csv(const RunResult& result, const std::string& path) {
  std::ofstream out = open_for_write(path);
  const int N = result.mass_history.empty() ? 0 : static_cast<int>(result.mass_history[0].size());
  out << "step,t,dt";
  for (int k = 0; k < N; ++k) out << ",mass_" << (k + 1);
  if (N > 1) out << ",mass_total";
  out << "\n";
  for (std::size_t i = 0; i < result.mass_history.size(); ++i) {
    out << i << "," << format_sig17(result.time_history[i]) << ","
        << format_sig17(result.dt_history[i]);
    double total = 0.0;
    for (int k = 0; k < N; ++k) {
      total += result.mass_history[i][k];
      out << "," << format_sig17(result.mass_history[i][k]);
    }
    if (N > 1) out << "," << format_sig17(total);
    out << "\n";
  }
  if (!out) throw io_error("write failed for '" + path + "'");
}

void emit_convergence_csv(const ConvergenceReport& report, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "# scenario=" << report.scenario << "\n";
  out << "# t_final=" << format_sig17(report.t_final) << "\n";
  out << "# reference_level=" << report.reference_level << " (cu2 reference)\n";
  for (Scheme s : report.schemes)
    out << "# cfl_safety_" << scheme_name(s) << "=" << format_sig17(report.cfl_safety.at(s))
        << "\n";
  out << "scheme,n,dx,l1_error,rate\n";
  for (Scheme s : report.schemes) {
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
      out << scheme_name(s) << "," << report.levels[i] << "," << format_sig17(report.dxs[i])
          << "," << format_sig17(report.errors.at(s)[i]) << ",";
      if (i > 0) out << format_sig17(report.rates.at(s)[i]);
      out << "\n";
    }
  }
  if (!out) throw io_error("write failed for '" + path + "'");
}

std::string render_convergence_table(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "scenario " << report.scenario << ", T=" << report.t_final << ", reference level "
     << report.reference_level << " (cu2)\n";
  char line[256];
  std::snprintf(line, sizeof(line), "%3s", "n");
  os << line;
  for (Scheme s : report.schemes) {
    std::snprintf(line, sizeof(line), " | %12s %6s", scheme_name(s).c_str(), "rate");
    os << line;
  }
  os << "\n";
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    std::snprintf(line, sizeof(line), "%3d", report.levels[i]);
    os << line;
    for (Scheme s : report.schemes) {
      if (i == 0) {
        std::snprintf(line, sizeof(line), " | %12.4e %6s", report.errors.at(s)[i], "-");
      } else {
        std::snprintf(line, sizeof(line), " | %12.4e %6.2f", report.errors.at(s)[i],
                      report.rates.at(s)[i]);
      }
      os << line;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace nlcu
