#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nlcu/convergence.hpp"
#include "nlcu/csv.hpp"
#include "nlcu/errors.hpp"
#include "nlcu/scenario.hpp"

using namespace nlcu;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/nlcu_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("l1_error") {
  const Grid coarse(-1.0, 1.0, 4);
  const Grid fine(-1.0, 1.0, 8);
  State a, b;
  a.values = {{0.5, 0.5, 0.5, 0.5}};
  b.values = {{0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}};

  SUBCASE("identical states") { CHECK(l1_error(a, b, coarse, fine) == 0.0); }
  SUBCASE("unit offset integrates to the domain length") {
    State zero = a, one = b;
    for (auto& x : zero.values[0]) x = 0.0;
    for (auto& x : one.values[0]) x = 1.0;
    CHECK(l1_error(zero, one, coarse, fine) == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("shifted indicator differs on two cells") {
    State u = a, w = a;
    u.values = {{1.0, 0.0, 0.0, 0.0}};
    w.values = {{0.0, 1.0, 0.0, 0.0}};
    CHECK(l1_error(u, w, coarse, coarse) == doctest::Approx(2.0 * coarse.dx()).epsilon(1e-15));
  }
  SUBCASE("non-integer refinement rejected") {
    const Grid odd(-1.0, 1.0, 6);
    State c;
    c.values = {std::vector<double>(6, 0.0)};
    CHECK_THROWS_AS(l1_error(a, c, coarse, odd), invalid_parameter);
  }
}

TEST_CASE("solution csv shape and determinism") {
  const Grid grid(-1.0, 1.0, 4);
  State s;
  s.values = {std::vector<double>(4, 0.25), std::vector<double>(4, 0.75)};
  TempFile f1("sol1.csv"), f2("sol2.csv");
  emit_solution_csv(s, grid, f1.path);
  emit_solution_csv(s, grid, f2.path);
  const std::string text = slurp(f1.path);
  CHECK(text == slurp(f2.path));

  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "x,rho_1,rho_2");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
  CHECK(text.find("0.25") != std::string::npos);
}

TEST_CASE("unwritable path raises io_error") {
  const Grid grid(-1.0, 1.0, 2);
  State s;
  s.values = {{0.0, 1.0}};
  CHECK_THROWS_AS(emit_solution_csv(s, grid, "/no/such/dir/file.csv"), io_error);
}

TEST_CASE("scenario construction") {
  CHECK(scenario_names().size() == 4);
  CHECK_THROWS_AS(make_scenario("bogus"), invalid_parameter);

  SUBCASE("discontinuous scalar scenario projects the mid-cell breakpoint exactly") {
    const Scenario sc = make_scenario("arrhenius_discontinuous");
    CHECK(sc.base_cells == 100);  // dx = 0.02
    const Problem p = build_problem(sc, 0);
    // 0.75 sits mid-cell at dx = 0.02: that cell averages (0.8 + 0.2) / 2
    const int cell = static_cast<int>((0.75 - -1.0) / p.grid.dx());  // cell [0.74, 0.76]
    CHECK(p.initial.values[0][cell] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.model.components[0].interval().lo == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(p.model.components[0].interval().hi == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("smooth scenario interval comes from the projected averages") {
    const Problem p = build_problem(make_scenario("arrhenius_smooth"), 0);
    CHECK(p.model.components[0].interval().lo > 0.09);
    CHECK(p.model.components[0].interval().lo < 0.11);
    CHECK(p.model.components[0].interval().hi > 0.89);
    CHECK(p.model.components[0].interval().hi < 0.91);
  }
  SUBCASE("multilane discontinuous matches the figure grid") {
    const Scenario sc = make_scenario("multilane_discontinuous");
    CHECK(sc.base_cells == 200);  // dx = 0.01
    CHECK(sc.t_final == 0.25);
    const Problem p = build_problem(sc, 0);
    CHECK(p.model.n_components() == 2);
  }
  SUBCASE("custom scenario from a config map") {
    const std::map<std::string, std::string> cfg{
        {"model", "arrhenius"}, {"t_final", "0.05"}, {"cells", "50"},
        {"rho0_1_breaks", "-1,0,1"}, {"rho0_1_values", "0.3,0.6"}};
    const Scenario sc = make_custom_scenario(cfg);
    CHECK(sc.base_cells == 50);
    const Problem p = build_problem(sc, 0);
    CHECK(p.initial.values[0][0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(p.initial.values[0][49] == doctest::Approx(0.6).epsilon(1e-14));
  }
}

TEST_CASE("convergence study on a tiny ladder") {
  const Scenario sc = make_scenario("arrhenius_smooth");
  const std::vector<Scheme> schemes{Scheme::cu1, Scheme::cu2};
  const ConvergenceReport r1 = convergence_study(sc, schemes, 2, 4);

  SUBCASE("determinism across repeated runs") {
    const ConvergenceReport r2 = convergence_study(sc, schemes, 2, 4);
    for (Scheme s : schemes)
      for (int n = 0; n < 2; ++n) CHECK(r1.errors.at(s)[n] == r2.errors.at(s)[n]);
  }
  SUBCASE("rates follow the log2 identity and errors shrink") {
    for (Scheme s : schemes) {
      CHECK(r1.errors.at(s)[1] < r1.errors.at(s)[0]);
      CHECK(r1.rates.at(s)[1] ==
            doctest::Approx(std::log2(r1.errors.at(s)[0] / r1.errors.at(s)[1])).epsilon(1e-15));
    }
  }
  SUBCASE("csv round-trip reproduces the rate identity") {
    TempFile f("conv.csv");
    emit_convergence_csv(r1, f.path);
    std::ifstream in(f.path);
    std::string line;
    std::map<std::string, std::vector<std::pair<double, double>>> parsed;  // error, rate
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("scheme", 0) == 0) continue;
      std::stringstream ss(line);
      std::string scheme, n, dx, err, rate;
      std::getline(ss, scheme, ',');
      std::getline(ss, n, ',');
      std::getline(ss, dx, ',');
      std::getline(ss, err, ',');
      std::getline(ss, rate, ',');
      parsed[scheme].push_back({std::stod(err), rate.empty() ? 0.0 : std::stod(rate)});
    }
    for (Scheme s : schemes) {
      const auto& rows = parsed[scheme_name(s)];
      REQUIRE(rows.size() == 2);
      CHECK(rows[1].second == std::log2(rows[0].first / rows[1].first));
    }
  }
  SUBCASE("reference level must exceed the finest level") {
    CHECK_THROWS_AS(convergence_study(sc, schemes, 3, 2), invalid_parameter);
  }
}
