#pragma once

// Random valid inputs for the property tests. Fixed seeds keep runs reproducible.

#include <algorithm>
#include <random>
#include <vector>

#include "eikvv/piecewise_poly.hpp"
#include "eikvv/potential.hpp"

namespace eikvv::testing {

/// Random nonnegative piecewise-linear potential with 2..8 segments; about a
/// third of the breakpoint values are exactly zero.
inline PotentialProfile random_potential(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> segs(1, 7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int inner = segs(rng);
  std::vector<double> b{0.0, 1.0};
  for (int i = 0; i < inner; ++i) b.push_back(0.02 + 0.96 * unit(rng));
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<double> v;
  for (std::size_t i = 0; i < b.size(); ++i) v.push_back(unit(rng) < 0.3 ? 0.0 : 2.0 * unit(rng));
  return PotentialProfile::piecewise_linear(std::move(b), std::move(v));
}

/// Random continuous piecewise quadratic on [a, b].
inline PiecewisePoly random_candidate(std::mt19937_64& rng, double a = -1.0, double b = 1.0) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  const int k = count(rng);
  std::vector<double> breaks{a, b};
  for (int i = 1; i < k; ++i) breaks.push_back(a + (b - a) * (0.05 + 0.9 * unit(rng)));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Quadratic> pieces;
  double value = coeff(rng);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Quadratic q{0.0, coeff(rng), coeff(rng)};
    const double x = breaks[i];
    q.c0 = value - q.c1 * x - q.c2 * x * x;
    value = q(breaks[i + 1]);
    pieces.push_back(q);
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

}  // namespace eikvv::testing
