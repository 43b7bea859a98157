#include "doctest.h"

#include <cmath>

#include "eikvv/gauss_legendre.hpp"

using namespace eikvv;

TEST_CASE("order-8 rule") {
  const auto& rule = gauss_legendre8();
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rule.nodes[7] == doctest::Approx(0.9602898564975363).epsilon(1e-15));
  CHECK(rule.weights[7] == doctest::Approx(0.1012285362903763).epsilon(1e-14));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[7 - i]).epsilon(1e-15));
    CHECK(rule.weights[i] == doctest::Approx(rule.weights[7 - i]).epsilon(1e-15));
  }
}

TEST_CASE("exact for monomials up to degree 15") {
  for (int k = 0; k <= 15; ++k) {
    const double got = integrate_gl8([k](double x) { return std::pow(x, k); }, 0.0, 1.0);
    CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
  }
}

TEST_CASE("composite panels converge on e^t") {
  const double exact = 1.0 - std::exp(-45.0);
  CHECK(integrate_gl8([](double t) { return std::exp(t); }, -45.0, 0.0, 45) == doctest::Approx(exact).epsilon(1e-15));
}
