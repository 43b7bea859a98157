#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "eikvv/error.hpp"
#include "eikvv/piecewise_poly.hpp"
#include "eikvv/reference_problems.hpp"
#include "generators.hpp"

using namespace eikvv;

TEST_CASE("construction enforces continuity and ordering") {
  CHECK_NOTHROW(PiecewisePoly({-1.0, 0.0, 1.0}, {{1, 1, 0}, {1, -1, 0}}));
  CHECK_THROWS_AS(PiecewisePoly({-1.0, 0.0, 1.0}, {{1, 1, 0}, {1.1, -1, 0}}), DomainError);
  CHECK_THROWS_AS(PiecewisePoly({0.0, 0.0, 1.0}, {{0, 0, 0}, {0, 0, 0}}), DomainError);
  CHECK_THROWS_AS(PiecewisePoly({0.0, 1.0}, {{0, 0, 0}, {0, 0, 0}}), DomainError);
}

TEST_CASE("evaluation and one-sided derivatives") {
  const auto u = reference::unit_rhs_solution();
  CHECK(u(0.0) == 1.0);
  CHECK(u(-0.25) == 0.75);
  CHECK(u.left_derivative(0.0) == 1.0);
  CHECK(u.right_derivative(0.0) == -1.0);
  CHECK(u.left_derivative(0.5) == -1.0);
  CHECK(u.right_derivative(0.5) == -1.0);
  CHECK(u.piece_of(0.0) == 0);
  CHECK(u.piece_of(0.1) == 1);
  CHECK(u.breakpoint_index(0.0) == 1);
  CHECK(u.breakpoint_index(0.3) == -1);
  CHECK_THROWS_AS(u(1.5), DomainError);
}

TEST_CASE("batched evaluation matches pointwise evaluation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = testing::random_candidate(rng);
    std::vector<double> x(257), val(x.size()), der(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = -1.0 + 2.0 * i / 256.0;
    u.eval_many(x, val);
    u.derivative_many(x, der);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(val[i] == doctest::Approx(u(x[i])).epsilon(1e-14).scale(1.0));
      const auto& q = u.pieces()[u.piece_of(x[i])];
      CHECK(der[i] == doctest::Approx(q.derivative(x[i])).epsilon(1e-14).scale(1.0));
    }
  }
}

TEST_CASE("interpolate_linear stays continuous") {
  const std::vector<double> x{0.0, 0.1, 0.35, 1.0};
  const std::vector<double> y{0.3, 0.0, 2.0, 1e-3};
  const auto f = PiecewisePoly::interpolate_linear(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(f(x[i]) == doctest::Approx(y[i]).epsilon(1e-15).scale(1.0));
  CHECK(f(0.05) == doctest::Approx(0.15).epsilon(1e-15));
}

TEST_CASE("from_potential and even reflection") {
  const auto V = PotentialProfile::vee(0.5);
  const auto f = PiecewisePoly::from_potential(V);
  CHECK(f.lo() == 0.0);
  CHECK(f.hi() == 1.0);
  const auto g = evenly_reflect(f);
  CHECK(g.lo() == -1.0);
  for (int i = -100; i <= 100; ++i) {
    const double x = i / 100.0;
    CHECK(g(x) == doctest::Approx(V(std::abs(x))).epsilon(1e-15).scale(1.0));
    CHECK(g(x) == doctest::Approx(reference::two_well_rhs()(x)).epsilon(1e-15).scale(1.0));
  }
  CHECK_THROWS_AS(evenly_reflect(reference::unit_rhs()), DomainError);
}

TEST_CASE("zero sets of piecewise polynomials") {
  const auto z = zero_set(reference::two_well_rhs());
  REQUIRE(z.points.size() == 2);
  CHECK(z.points[0] == -0.5);
  CHECK(z.points[1] == 0.5);
  CHECK(z.intervals.empty());

  CHECK(zero_set(reference::unit_rhs()).empty());

  // A double root at the vertex of a quadratic.
  const PiecewisePoly sq({0.0, 1.0}, {{0.09, -0.6, 1.0}});
  const auto zs = zero_set(sq);
  REQUIRE(zs.points.size() == 1);
  CHECK(zs.points[0] == doctest::Approx(0.3).epsilon(1e-12));

  const auto flat = zero_set(PiecewisePoly({-1.0, -0.2, 0.4, 1.0}, {{-0.2, -1, 0}, {0, 0, 0}, {-0.4, 1, 0}}));
  CHECK(flat.points.empty());
  REQUIRE(flat.intervals.size() == 1);
  CHECK(flat.intervals[0].lo == -0.2);
  CHECK(flat.intervals[0].hi == 0.4);
}

TEST_CASE("candidate files round-trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = testing::random_candidate(rng);
    std::ostringstream out;
    write_candidate(out, u);
    const auto back = parse_candidate(out.str());
    REQUIRE(back.pieces().size() == u.pieces().size());
    for (std::size_t k = 0; k < u.pieces().size(); ++k) {
      CHECK(back.breaks()[k] == u.breaks()[k]);
      CHECK(back.pieces()[k].c0 == u.pieces()[k].c0);
      CHECK(back.pieces()[k].c1 == u.pieces()[k].c1);
      CHECK(back.pieces()[k].c2 == u.pieces()[k].c2);
    }
  }
}

TEST_CASE("malformed candidates") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_candidate(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("qq 1\n0 1 0 0 0") == 1);
  CHECK(line_of("pp 0") == 1);
  CHECK(line_of("pp 2\n0 1 0 0 0\n1 2 0 0") == 3);
  CHECK(line_of("pp 2\n0 1 0 0 0\n1.5 2 0 0 0") == 3);
  CHECK(line_of("pp 1\n0 1 0 0 0\n1 2 0 0 0") == 3);
  CHECK(line_of("pp 1\n1 0 0 0 0") == 2);
  CHECK(line_of("pp 1\n0 1 x 0 0") == 2);
  CHECK_THROWS_AS(parse_candidate("pp 2\n0 1 0 0 0"), ParseError);
  CHECK_THROWS_AS(parse_candidate(""), ParseError);
  CHECK_THROWS_AS(parse_candidate("pp 2\n0 1 0 0 0\n1 2 5 0 0"), ParseError);
  CHECK_NOTHROW(parse_candidate("# tent\npp 2\n-1 0 1 1 0\n\n0 1 1 -1 0\n"));
}
