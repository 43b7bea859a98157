#include "doctest.h"

#include <cmath>
#include <random>

#include "eikvv/error.hpp"
#include "eikvv/reference_problems.hpp"
#include "eikvv/viscosity_check.hpp"
#include "generators.hpp"

using namespace eikvv;
using reference::two_well_high_solution;
using reference::two_well_low_solution;
using reference::two_well_rhs;
using reference::unit_rhs;
using reference::unit_rhs_solution;

namespace {

PiecewisePoly tent(double scale) { return PiecewisePoly({-1.0, 0.0, 1.0}, {{scale, scale, 0}, {scale, -scale, 0}}); }
PiecewisePoly vee_minus_one() { return PiecewisePoly({-1.0, 0.0, 1.0}, {{-1, -1, 0}, {-1, 1, 0}}); }

void check_interval(const std::optional<SlopeInterval>& s, double lo, double hi) {
  REQUIRE(s.has_value());
  CHECK(s->lo == doctest::Approx(lo).epsilon(1e-15).scale(1.0));
  CHECK(s->hi == doctest::Approx(hi).epsilon(1e-15).scale(1.0));
}

}  // namespace

TEST_CASE("closed-form references") {
  const auto u1 = two_well_low_solution();
  const auto u2 = two_well_high_solution();
  const auto f = two_well_rhs();
  for (int i = -1000; i <= 1000; ++i) {
    const double x = i / 1000.0;
    CHECK(f(x) == doctest::Approx(std::abs(std::abs(x) - 0.5)).epsilon(1e-15).scale(1.0));
    const double a = x <= 0 ? 0.5 * (x + 0.5) * (x + 0.5) - 0.125 : 0.5 * (x - 0.5) * (x - 0.5) - 0.125;
    CHECK(u1(x) == doctest::Approx(a).epsilon(1e-15).scale(1.0));
    double b;
    if (x <= -0.5) b = -0.5 * (x + 0.5) * (x + 0.5) + 0.125;
    else if (x <= 0) b = 0.5 * (x + 0.5) * (x + 0.5) + 0.125;
    else if (x <= 0.5) b = 0.5 * (x - 0.5) * (x - 0.5) + 0.125;
    else b = -0.5 * (x - 0.5) * (x - 0.5) + 0.125;
    CHECK(u2(x) == doctest::Approx(b).epsilon(1e-15).scale(1.0));
  }
  CHECK(u1(0.5) == -0.125);
  CHECK(u2(0.5) == 0.125);
  CHECK(u2(0.0) == 0.25);
}

TEST_CASE("superdifferentials") {
  check_interval(superdifferential_at(unit_rhs_solution(), 0.0), -1.0, 1.0);
  check_interval(superdifferential_at(two_well_low_solution(), 0.0), -0.5, 0.5);
  // Right of the origin u1 = (x - 1/2)^2 / 2 - 1/8, so u1'(0.25) = -0.25.
  check_interval(superdifferential_at(two_well_low_solution(), 0.25), -0.25, -0.25);
  check_interval(superdifferential_at(two_well_low_solution(), -0.25), 0.25, 0.25);
  CHECK_FALSE(superdifferential_at(vee_minus_one(), 0.0).has_value());
  CHECK_THROWS_AS(superdifferential_at(unit_rhs_solution(), 1.0), DomainError);
  CHECK_THROWS_AS(superdifferential_at(unit_rhs_solution(), -2.0), DomainError);
}

TEST_CASE("subdifferentials") {
  check_interval(subdifferential_at(vee_minus_one(), 0.0), -1.0, 1.0);
  CHECK_FALSE(subdifferential_at(unit_rhs_solution(), 0.0).has_value());
  check_interval(subdifferential_at(two_well_high_solution(), -0.5), 0.0, 0.0);
  check_interval(superdifferential_at(two_well_high_solution(), -0.5), 0.0, 0.0);
  CHECK_THROWS_AS(subdifferential_at(unit_rhs_solution(), -1.0), DomainError);
}

TEST_CASE("subsolution checks") {
  CHECK(check_subsolution(unit_rhs_solution(), unit_rhs()).status == VerdictStatus::pass);
  CHECK(check_subsolution(two_well_high_solution(), two_well_rhs()).status == VerdictStatus::pass);
  const auto v = check_subsolution(tent(2.0), unit_rhs());
  CHECK(v.status == VerdictStatus::fail);
  REQUIRE(v.has_witness);
  CHECK(v.role == VerdictRole::subsolution);
  CHECK(v.relation == "<=");
  CHECK(v.lhs > v.rhs);
  CHECK(v.margin < 0.0);
  // Either a smooth point with slope 2, or the boundary where u = 2 > 0 is not reached.
  CHECK(v.lhs == doctest::Approx(2.0));
}

TEST_CASE("supersolution checks") {
  const auto v = check_supersolution(vee_minus_one(), unit_rhs());
  CHECK(v.status == VerdictStatus::fail);
  REQUIRE(v.has_witness);
  CHECK(v.witness_x == 0.0);
  CHECK(v.lhs == 0.0);
  CHECK(v.rhs == 1.0);
  CHECK(v.relation == ">=");
  CHECK(v.detail == "subdifferential-kink");
  CHECK(check_supersolution(two_well_low_solution(), two_well_rhs()).status == VerdictStatus::pass);
  CHECK(check_supersolution(unit_rhs_solution(), unit_rhs()).status == VerdictStatus::pass);
}

TEST_CASE("solution checks") {
  for (const auto& [u, f] : {std::pair{unit_rhs_solution(), unit_rhs()}, std::pair{two_well_low_solution(), two_well_rhs()},
                             std::pair{two_well_high_solution(), two_well_rhs()}}) {
    const auto v = check_solution(u, f);
    CHECK(v.status == VerdictStatus::pass);
    CHECK_FALSE(v.has_witness);
    CHECK(v.margin >= -1e-15);
  }
  // |x| - 1 satisfies the equation almost everywhere yet is rejected.
  CHECK(check_solution(vee_minus_one(), unit_rhs()).status == VerdictStatus::fail);
  CHECK_THROWS_AS(check_solution(PiecewisePoly::constant(0.0, 1.0, 0.0), unit_rhs()), DomainError);
}

TEST_CASE("reflected vee limit is the high solution") {
  const auto u = evenly_reflect(maximal_radial_solution(PotentialProfile::vee(0.5)));
  CHECK(check_solution(u, two_well_rhs()).status == VerdictStatus::pass);
  const auto u2 = two_well_high_solution();
  for (int i = 0; i <= 10000; ++i) {
    const double x = i / 10000.0;
    CHECK(std::abs(u(x) - u2(x)) <= 1e-12);
  }
  // The origin is a concave kink of the reflected radial profile.
  check_interval(superdifferential_at(u, 0.0), -0.5, 0.5);
}

TEST_CASE("maximal radial solutions") {
  const auto one = maximal_radial_solution(PotentialProfile::constant(1.0));
  for (int i = 0; i <= 100; ++i) CHECK(one(i / 100.0) == doctest::Approx(1.0 - i / 100.0).epsilon(1e-15).scale(1.0));
  const auto zero = maximal_radial_solution(PotentialProfile::constant(0.0));
  for (int i = 0; i <= 100; ++i) CHECK(zero(i / 100.0) == 0.0);

  std::mt19937_64 rng(61);
  CheckOptions opt;
  opt.boundary = BoundaryConvention::right_end;
  for (int trial = 0; trial < 60; ++trial) {
    const auto V = testing::random_potential(rng);
    const auto u = maximal_radial_solution(V);
    CHECK(u(1.0) == 0.0);
    const auto v = check_solution(u, PiecewisePoly::from_potential(V), opt);
    CHECK(v.status == VerdictStatus::pass);
  }
}

TEST_CASE("differentials are both nonempty exactly at points of differentiability") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = testing::random_candidate(rng);
    std::vector<double> xs;
    for (std::size_t k = 1; k + 1 < u.breaks().size(); ++k) xs.push_back(u.breaks()[k]);
    for (int i = 0; i < 20; ++i) xs.push_back(-0.99 + 1.98 * unit(rng));
    for (double x : xs) {
      const auto sup = superdifferential_at(u, x);
      const auto sub = subdifferential_at(u, x);
      const double dl = u.left_derivative(x), dr = u.right_derivative(x);
      const bool differentiable = std::abs(dl - dr) <= 1e-12 * std::max(1.0, std::abs(dl));
      CHECK((sup.has_value() && sub.has_value()) == differentiable);
      if (differentiable) {
        CHECK(sup->lo == sup->hi);
        CHECK(sub->lo == sub->hi);
        CHECK(sup->lo == doctest::Approx(dl));
        CHECK(sub->lo == doctest::Approx(dl));
      }
    }
  }
}

TEST_CASE("comparison on the two-well problem") {
  const auto f = two_well_rhs();
  const auto A = zero_set(f);
  const auto forward = check_comparison(two_well_low_solution(), two_well_high_solution(), f, A);
  CHECK(forward.status == VerdictStatus::pass);
  CHECK(forward.role == VerdictRole::comparison);
  const auto reverse = check_comparison(two_well_high_solution(), two_well_low_solution(), f, A);
  CHECK(reverse.status == VerdictStatus::pass_vacuous);
  CHECK(reverse.detail == "hypothesis-not-met");
  CHECK(reverse.passed());
  CHECK(to_string(reverse.status) == "pass-vacuous");
}

TEST_CASE("comparison catches a violated conclusion") {
  // u <= v at the zeros of f but not in between: not both solutions, so the
  // theorem does not apply and the checker must report the witness.
  const auto f = two_well_rhs();
  const PiecewisePoly u = PiecewisePoly::constant(-1.0, 1.0, 0.0);
  const PiecewisePoly v({-1.0, 1.0}, {{-0.25, 0.0, 1.0}});
  const auto verdict = check_comparison(u, v, f, zero_set(f));
  CHECK(verdict.status == VerdictStatus::fail);
  REQUIRE(verdict.has_witness);
  CHECK(std::abs(verdict.witness_x) < 0.5);
}

TEST_CASE("comparison is reflexive") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = testing::random_candidate(rng);
    std::vector<double> x{-1.0, -0.3, 0.2, 1.0};
    std::vector<double> y;
    for (std::size_t i = 0; i < x.size(); ++i) y.push_back(unit(rng) < 0.4 ? 0.0 : unit(rng));
    const auto f = PiecewisePoly::interpolate_linear(x, y);
    CHECK(check_comparison(u, u, f, zero_set(f)).status == VerdictStatus::pass);
  }
}

TEST_CASE("comparison verdicts are antisymmetric") {
  const CheckOptions opt;
  const auto f = two_well_rhs();
  const auto A = zero_set(f);
  const auto u1 = two_well_low_solution();
  const auto u2 = two_well_high_solution();
  double strict = 0.0;
  for (int i = -1000; i <= 1000; ++i) strict = std::max(strict, u2(i / 1000.0) - u1(i / 1000.0));
  REQUIRE(strict > 2.0 * opt.tol);
  CHECK(check_comparison(u1, u2, f, A, opt).status == VerdictStatus::pass);
  CHECK(check_comparison(u2, u1, f, A, opt).status == VerdictStatus::pass_vacuous);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = testing::random_candidate(rng);
    std::vector<Quadratic> shifted(u.pieces().begin(), u.pieces().end());
    for (auto& q : shifted) q.c0 += 0.01;
    const PiecewisePoly v(std::vector<double>(u.breaks().begin(), u.breaks().end()), shifted);
    CHECK(check_comparison(u, v, f, A, opt).status == VerdictStatus::pass);
    CHECK(check_comparison(v, u, f, A, opt).status == VerdictStatus::pass_vacuous);
  }
}

TEST_CASE("uniqueness for a positive right-hand side") {
  const auto f = unit_rhs();
  const CheckOptions opt;
  CHECK(check_solution(unit_rhs_solution(), f, opt).passed());
  std::vector<PiecewisePoly> perturbed{
      tent(1.0 + 1e-6),
      tent(0.999),
      PiecewisePoly({-1.0, 1.0}, {{1e-3, 0.0, -1e-3}}),
      PiecewisePoly({-1.0, 0.1, 1.0}, {{1.0, 1.0, 0.0}, {1.2, -1.0, 0.0}}),
      PiecewisePoly({-1.0, -0.5, 0.0, 0.5, 1.0}, {{1, 1, 0}, {0, -1, 0}, {0, 1, 0}, {1, -1, 0}}),
      vee_minus_one(),
  };
  const auto exact = unit_rhs_solution();
  for (const auto& w : perturbed) {
    double gap = 0.0;
    for (int i = -1000; i <= 1000; ++i) gap = std::max(gap, std::abs(w(i / 1000.0) - exact(i / 1000.0)));
    REQUIRE(gap > 2.0 * opt.tol);
    CHECK(check_solution(w, f, opt).status == VerdictStatus::fail);
  }
}

TEST_CASE("verdict strings") {
  CHECK(to_string(VerdictStatus::pass) == "pass");
  CHECK(to_string(VerdictStatus::fail) == "fail");
  CHECK(to_string(VerdictRole::subsolution) == "subsolution");
  CHECK(to_string(VerdictRole::comparison) == "comparison");
}
