#include "nlcu/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlcu/errors.hpp"

namespace nlcu {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

InitialData initial_from_config(const std::map<std::string, std::string>& cfg,
                                const std::string& prefix) {
  auto breaks = cfg.find(prefix + "_breaks");
  auto values = cfg.find(prefix + "_values");
  auto constant = cfg.find(prefix + "_const");
  if (breaks != cfg.end() && values != cfg.end())
    return InitialData::piecewise(parse_list(breaks->second), parse_list(values->second));
  if (constant != cfg.end()) {
    const double c = std::stod(constant->second);
    return InitialData::smooth([c](double) { return c; });
  }
  throw invalid_parameter("custom scenario: missing " + prefix +
                          "_breaks/_values or " + prefix + "_const");
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"arrhenius_smooth", "arrhenius_discontinuous", "multilane_smooth",
          "multilane_discontinuous"};
}

Scenario make_scenario(const std::string& name) {
  Scenario s;
  s.name = name;
  s.kernel = make_quadratic_kernel(0.2);

  if (name == "arrhenius_smooth") {
    s.model = make_scalar_system(make_arrhenius_model());
    s.t_final = 0.15;
    s.base_cells = 40;  // dx = 1/20
    s.initial = {InitialData::smooth([](double x) { return 0.5 + 0.4 * std::sin(kPi * x); })};
    return s;
  }
  if (name == "arrhenius_discontinuous") {
    s.model = make_scalar_system(make_arrhenius_model());
    s.t_final = 1.0;
    s.base_cells = 100;  // dx = 0.02, the profile grid
    s.initial = {InitialData::piecewise({-1.0, -0.5, 0.0, 0.5, 0.75, 1.0},
                                        {0.2, 1.0, 0.2, 0.8, 0.2})};
    return s;
  }
  if (name == "multilane_smooth") {
    s.model = make_multilane_model();
    s.t_final = 0.15;
    s.base_cells = 40;
    s.initial = {InitialData::smooth([](double x) { return 0.5 + 0.5 * std::sin(kPi * x); }),
                 InitialData::smooth([](double x) { return 0.25 + 0.25 * std::cos(2.0 * kPi * x); })};
    return s;
  }
  if (name == "multilane_discontinuous") {
    s.model = make_multilane_model();
    s.t_final = 0.25;
    s.base_cells = 200;  // dx = 0.01
    s.initial = {InitialData::piecewise({-1.0, 0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}),
                 InitialData::piecewise({-1.0, 0.5, 1.0}, {0.0, 1.0})};
    return s;
  }
  std::string valid;
  for (const auto& v : scenario_names()) valid += (valid.empty() ? "" : ", ") + v;
  throw invalid_parameter("unknown scenario '" + name + "' (valid: " + valid + ", custom)");
}

Scenario make_custom_scenario(const std::map<std::string, std::string>& cfg) {
  Scenario s;
  s.name = "custom";
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
  };
  s.kernel = make_quadratic_kernel(std::stod(get("eta", "0.2")));
  s.t_final = std::stod(get("t_final", "0.15"));
  s.base_cells = std::stoi(get("cells", "40"));

  const std::string model = get("model", "arrhenius");
  if (model == "arrhenius") {
    s.model = make_scalar_system(make_arrhenius_model());
    s.initial = {initial_from_config(cfg, "rho0_1")};
  } else if (model == "multilane") {
    s.model = make_multilane_model();
    s.initial = {initial_from_config(cfg, "rho0_1"), initial_from_config(cfg, "rho0_2")};
  } else {
    throw invalid_parameter("custom scenario: model must be arrhenius or multilane");
  }
  return s;
}

Problem build_problem(const Scenario& scenario, int level) {
  if (level < 0) throw invalid_parameter("build_problem: level must be nonnegative");
  const int cells = scenario.base_cells << level;
  Grid grid(scenario.x_min, scenario.x_max, cells);
  State initial = project_initial_data(scenario.initial, grid);

  SystemModel model = scenario.model;
  for (int k = 0; k < model.n_components(); ++k) {
    const auto [mn, mx] =
        std::minmax_element(initial.values[k].begin(), initial.values[k].end());
    model.components[k] = model.components[k].with_interval({*mn, *mx});
  }

  return Problem{grid, scenario.kernel, compute_kernel_weights(scenario.kernel, grid.dx()),
                 std::move(model), std::move(initial)};
}

}  // namespace nlcu
