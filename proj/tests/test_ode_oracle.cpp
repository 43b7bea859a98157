#include "doctest.h"

#include <cmath>
#include <random>

#include "eikvv/vv_solver.hpp"
#include "generators.hpp"

using namespace eikvv;

TEST_CASE("oracle reproduces the n = 1 closed form") {
  const auto grid = uniform_grid(1001);
  const auto p = ode_oracle_p(ProblemSpec{PotentialProfile::constant(1.0), 1, 0.1}, grid);
  CHECK(p[0] == 0.0);
  CHECK(std::abs(p[300] - (-(1.0 - std::exp(-3.0)))) <= 1e-6);
}

TEST_CASE("oracle of the zero potential is zero") {
  const auto grid = uniform_grid(2001);
  for (int n : {1, 4}) {
    const auto p = ode_oracle_p(ProblemSpec{PotentialProfile::constant(0.0), n, 0.01}, grid);
    for (double x : p) CHECK(x == 0.0);
  }
}

TEST_CASE("oracle agrees with the quadrature evaluator") {
  const auto grid = uniform_grid(1001);
  const ProblemSpec spec{PotentialProfile::vee(0.5), 2, 0.01};
  const auto p = ode_oracle_p(spec, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(p[i] - eval_p_eps(spec, grid[i])));
  CHECK(worst <= 1e-6 * spec.potential.sup_bound());
}

TEST_CASE("oracle agrees on random potentials and dimensions") {
  std::mt19937_64 rng(8);
  const auto grid = uniform_grid(8001);
  for (int trial = 0; trial < 4; ++trial) {
    const auto V = testing::random_potential(rng);
    if (V.sup_bound() == 0.0) continue;
    for (int n : {1, 3, 5}) {
      for (double eps : {0.1, 0.001}) {
        const ProblemSpec spec{V, n, eps};
        const auto p = ode_oracle_p(spec, grid);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); i += 4) worst = std::max(worst, std::abs(p[i] - eval_p_eps(spec, grid[i])));
        CHECK(worst <= 1e-6 * V.sup_bound());
      }
    }
  }
}

TEST_CASE("coarse grids are refused with the required spacing") {
  const auto grid = uniform_grid(11);
  try {
    ode_oracle_p(ProblemSpec{PotentialProfile::constant(1.0), 1, 0.01}, grid);
    FAIL("expected SpacingError");
  } catch (const SpacingError& e) {
    CHECK(e.required_spacing() == doctest::Approx(0.00125));
    CHECK(e.actual_spacing() == doctest::Approx(0.1));
  }
  const std::vector<double> late{0.5, 1.0};
  CHECK_THROWS_AS(ode_oracle_p(ProblemSpec{PotentialProfile::constant(1.0), 1, 0.9}, late), DomainError);
}
