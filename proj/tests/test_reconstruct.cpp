#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nlcu/errors.hpp"
#include "nlcu/reconstruct.hpp"

using namespace nlcu;

TEST_CASE("minmod cases") {
  CHECK(minmod(1.0, 2.0) == 1.0);
  CHECK(minmod(-1.0, 2.0) == 0.0);
  CHECK(minmod(-2.0, -1.0) == -1.0);
  CHECK(minmod(0.0, 5.0) == 0.0);
  CHECK(minmod(3.0, 3.0) == 3.0);
  CHECK(minmod(2.0, -2.0) == 0.0);
  // tie with equal magnitude returns the first argument
  CHECK(minmod(1.5, 1.5) == 1.5);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int i = 0; i < 300; ++i) {
    const double a = d(rng), b = d(rng);
    const double m = minmod(a, b);
    CHECK(std::abs(m) <= std::min(std::abs(a), std::abs(b)) + 1e-15);
    CHECK(minmod(a, a) == a);
    if (std::abs(a) != std::abs(b)) CHECK(minmod(a, b) == minmod(b, a));
  }
}

TEST_CASE("compute_slopes") {
  const Grid grid(-1.0, 1.0, 8);

  SUBCASE("constant state") {
    for (double s : compute_slopes(std::vector<double>(8, 0.4), grid, 1.0)) CHECK(s == 0.0);
  }
  SUBCASE("linear data away from the periodic seam") {
    std::vector<double> v(8);
    for (int j = 0; j < 8; ++j) v[j] = 0.25 * grid.center(j);
    const auto s = compute_slopes(v, grid, 1.0);
    for (int j = 1; j < 7; ++j) CHECK(s[j] == doctest::Approx(0.25).epsilon(1e-13));
  }
  SUBCASE("zero slope at a local peak") {
    std::vector<double> v(8, 0.0);
    v[4] = 1.0;
    const auto s = compute_slopes(v, grid, 1.0);
    CHECK(s[4] == 0.0);
  }
  SUBCASE("theta validation") {
    CHECK_THROWS_AS(compute_slopes(std::vector<double>(8, 0.0), grid, 0.5), invalid_parameter);
    CHECK_THROWS_AS(compute_slopes(std::vector<double>(8, 0.0), grid, 2.5), invalid_parameter);
  }
}

TEST_CASE("interface_values") {
  const Grid grid(0.0, 0.8, 8);  // dx = 0.1

  SUBCASE("zero slopes reproduce the piecewise-constant case") {
    std::vector<double> v{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    const auto r = interface_values(v, std::vector<double>(8, 0.0), grid);
    for (int j = 0; j < 8; ++j) {
      CHECK(r.left_values[j] == v[j]);
      CHECK(r.right_values[j] == v[grid.wrap(j + 1)]);
    }
  }
  SUBCASE("hand formula") {
    std::vector<double> v(8, 0.4);
    std::vector<double> s(8, 0.0);
    s[2] = 1.0;
    const auto r = interface_values(v, s, grid);
    CHECK(r.left_values[2] == doctest::Approx(0.45).epsilon(1e-15));
    CHECK(r.right_values[1] == doctest::Approx(0.35).epsilon(1e-15));
  }
  SUBCASE("cell average of the reconstruction is the cell average") {
    // midpoint-anchored line: the face values straddle rho_j symmetrically
    std::vector<double> v{0.3, 0.9, 0.5, 0.2, 0.8, 0.1, 0.6, 0.4};
    const auto s = compute_slopes(v, grid, 1.0);
    const auto r = interface_values(v, s, grid);
    for (int j = 0; j < 8; ++j) {
      const double left_face = r.right_values[grid.wrap(j - 1)];  // value at x_{j-1/2}+
      const double right_face = r.left_values[j];                 // value at x_{j+1/2}-
      CHECK(0.5 * (left_face + right_face) == doctest::Approx(v[j]).epsilon(1e-14));
    }
  }
}

TEST_CASE("bound preservation of one-sided values") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.2, 1.0);
  const Grid grid(-1.0, 1.0, 32);
  for (double theta : {1.0, 1.5, 2.0}) {
    std::vector<double> v(32);
    for (auto& x : v) x = d(rng);
    const auto s = compute_slopes(v, grid, theta);
    const auto r = interface_values(v, s, grid);
    for (int j = 0; j < 32; ++j) {
      const int jp = grid.wrap(j + 1);
      const double lo = std::min(v[j], v[jp]);
      const double hi = std::max(v[j], v[jp]);
      CHECK(r.left_values[j] >= lo - 1e-14);
      CHECK(r.left_values[j] <= hi + 1e-14);
      CHECK(r.right_values[j] >= lo - 1e-14);
      CHECK(r.right_values[j] <= hi + 1e-14);
    }
  }
}
