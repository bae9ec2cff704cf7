#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlcu/checks.hpp"
#include "nlcu/convergence.hpp"
#include "nlcu/csv.hpp"
#include "nlcu/errors.hpp"
#include "nlcu/scenario.hpp"

namespace {

using nlcu::Scheme;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw nlcu::invalid_parameter("cannot read config file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) cfg[key] = value;
  }
  return cfg;
}

// command-line flags override config-file keys
template <typename T>
void from_config(const CLI::App& cmd, const std::string& flag,
                 const std::map<std::string, std::string>& cfg, const std::string& key,
                 T& target) {
  if (cmd.count(flag) > 0) return;
  auto it = cfg.find(key);
  if (it == cfg.end()) return;
  if constexpr (std::is_same_v<T, std::string>) {
    target = it->second;
  } else if constexpr (std::is_same_v<T, int>) {
    target = std::stoi(it->second);
  } else if constexpr (std::is_same_v<T, double>) {
    target = std::stod(it->second);
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    target = std::stoull(it->second);
  } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
    target.clear();
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) target.push_back(item);
  }
}

nlcu::Scenario resolve_scenario(const std::string& name,
                                const std::map<std::string, std::string>& cfg) {
  if (name == "custom") return nlcu::make_custom_scenario(cfg);
  return nlcu::make_scenario(name);
}

std::vector<Scheme> resolve_schemes(const std::vector<std::string>& names) {
  if (names.empty()) throw nlcu::invalid_parameter("no scheme selected (use --scheme)");
  std::vector<Scheme> out;
  for (const auto& n : names) out.push_back(nlcu::scheme_from_name(n));
  return out;
}

std::string out_path(const std::string& dir, const std::string& file) {
  if (dir.empty()) return file;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / file).string();
}

int run_solve(const nlcu::Scenario& scenario, Scheme scheme, int level, double cfl, double theta,
              double t_final, const std::string& out_dir) {
  nlcu::Problem problem = nlcu::build_problem(scenario, level);
  nlcu::SchemeConfig config{scheme, cfl > 0.0 ? cfl : nlcu::default_cfl_safety(scheme), theta,
                            t_final > 0.0 ? t_final : scenario.t_final};
  const nlcu::RunResult result = nlcu::run(problem, config);

  const std::string tag = scenario.name + "_" + nlcu::scheme_name(scheme) + "_n" +
                          std::to_string(level);
  const std::string solution = out_path(out_dir, "solution_" + tag + ".csv");
  const std::string masslog = out_path(out_dir, "mass_" + tag + ".csv");
  nlcu::emit_solution_csv(result.snapshots.back(), problem.grid, solution);
  nlcu::emit_mass_log_csv(result, masslog);
  std::cout << "wrote " << solution << " (" << problem.grid.n_cells() << " cells, "
            << result.steps << " steps)\n";
  std::cout << "wrote " << masslog << "\n";
  return kExitOk;
}

int run_converge(const nlcu::Scenario& scenario, const std::vector<Scheme>& schemes, int levels,
                 int ref_level, double cfl, double theta, const std::string& out_dir) {
  std::map<Scheme, double> overrides;
  if (cfl > 0.0)
    for (Scheme s : schemes) overrides[s] = cfl;
  const nlcu::ConvergenceReport report = nlcu::convergence_study(
      scenario, schemes, levels, ref_level, theta, cfl > 0.0 ? &overrides : nullptr);
  std::cout << nlcu::render_convergence_table(report);
  const std::string path = out_path(out_dir, "convergence_" + scenario.name + ".csv");
  nlcu::emit_convergence_csv(report, path);
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

int run_check(std::uint64_t seed) {
  bool all_pass = true;
  for (const auto& r : nlcu::run_invariant_suite(seed)) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (worst " << r.worst << ")\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume solver for nonlocal conservation laws "
               "(central-upwind, Godunov and fully-discrete second-order schemes)"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file; flags override")
      ->expected(1);

  std::string scenario_name = "arrhenius_smooth";
  std::vector<std::string> scheme_names;
  int level = 0, levels = 6, ref_level = 9;
  double cfl = -1.0, theta = 1.0, t_final = -1.0;
  std::string out_dir;
  std::uint64_t seed = 42;

  auto add_common = [&](CLI::App* cmd, bool wants_level) {
    cmd->add_option("--config", config_path, "flat key=value config file; flags override");
    cmd->add_option("--scenario", scenario_name, "one of the built-ins or 'custom'");
    if (wants_level) cmd->add_option("--n", level, "refinement level (halves dx per level)");
    cmd->add_option("--cfl", cfl, "CFL safety factor override in (0,1]");
    cmd->add_option("--theta", theta, "limiter parameter in [1,2]")->capture_default_str();
    cmd->add_option("--out", out_dir, "output directory");
  };

  CLI::App* solve = app.add_subcommand("solve", "run one scheme and emit solution + mass CSVs");
  add_common(solve, true);
  solve->add_option("--scheme", scheme_names, "scheme (repeatable)");
  solve->add_option("--t-final", t_final, "override the scenario's final time");

  CLI::App* converge = app.add_subcommand("converge", "grid-refinement study with rates");
  add_common(converge, false);
  converge->add_option("--scheme", scheme_names, "scheme (repeatable)");
  converge->add_option("--levels", levels, "number of refinement levels")->capture_default_str();
  converge->add_option("--ref-level", ref_level, "reference refinement level")
      ->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "run the randomized invariant suite");
  check->add_option("--config", config_path, "flat key=value config file; flags override");
  check->add_option("--seed", seed, "seed for the randomized checks")->capture_default_str();

  app.add_subcommand("scenarios", "list built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    const auto cfg = load_config(config_path);

    if (app.got_subcommand("scenarios")) {
      for (const auto& n : nlcu::scenario_names()) std::cout << n << "\n";
      return kExitOk;
    }
    if (app.got_subcommand("check")) {
      from_config(*check, "--seed", cfg, "seed", seed);
      return run_check(seed);
    }
    if (app.got_subcommand("solve")) {
      from_config(*solve, "--scenario", cfg, "scenario", scenario_name);
      from_config(*solve, "--scheme", cfg, "scheme", scheme_names);
      from_config(*solve, "--n", cfg, "n", level);
      from_config(*solve, "--cfl", cfg, "cfl", cfl);
      from_config(*solve, "--theta", cfg, "theta", theta);
      from_config(*solve, "--t-final", cfg, "t-final", t_final);
      from_config(*solve, "--out", cfg, "out", out_dir);
      const auto scenario = resolve_scenario(scenario_name, cfg);
      const auto schemes = resolve_schemes(scheme_names);
      int rc = kExitOk;
      for (Scheme s : schemes)
        rc = std::max(rc, run_solve(scenario, s, level, cfl, theta, t_final, out_dir));
      return rc;
    }
    // converge
    from_config(*converge, "--scenario", cfg, "scenario", scenario_name);
    from_config(*converge, "--scheme", cfg, "scheme", scheme_names);
    from_config(*converge, "--levels", cfg, "levels", levels);
    from_config(*converge, "--ref-level", cfg, "ref-level", ref_level);
    from_config(*converge, "--cfl", cfg, "cfl", cfl);
    from_config(*converge, "--theta", cfg, "theta", theta);
    from_config(*converge, "--out", cfg, "out", out_dir);
    const auto scenario = resolve_scenario(scenario_name, cfg);
    const auto schemes = resolve_schemes(scheme_names);
    return run_converge(scenario, schemes, levels, ref_level, cfl, theta, out_dir);
  } catch (const nlcu::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlcu::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
