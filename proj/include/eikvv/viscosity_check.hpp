#pragma once

#include <optional>
#include <string>

#include "eikvv/piecewise_poly.hpp"
#include "eikvv/potential.hpp"

namespace eikvv {

/// Closed slope interval [lo, hi]; nullopt is the empty set.
struct SlopeInterval {
  double lo;
  double hi;
};

/// Slopes of C^1 test functions touching u from above at x. Singleton
/// {u'(x)} at smooth points, [d+, d-] at a concave kink, empty at a convex one.
std::optional<SlopeInterval> superdifferential_at(const PiecewisePoly& u, double x);
/// Mirror image: [d-, d+] at a convex kink, empty at a concave one.
std::optional<SlopeInterval> subdifferential_at(const PiecewisePoly& u, double x);

enum class VerdictStatus { pass, fail, pass_vacuous };
enum class VerdictRole { subsolution, supersolution, solution, comparison };

std::string to_string(VerdictStatus s);
std::string to_string(VerdictRole r);

/// Outcome of a check. `margin` is the smallest slack (rhs - lhs for "<=",
/// lhs - rhs for ">=") over every inequality tested; on failure the witness
/// is where that minimum was attained.
struct Verdict {
  VerdictStatus status = VerdictStatus::pass;
  VerdictRole role = VerdictRole::solution;
  double witness_x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;  // "<=", ">=" or "=="
  /// Which inequality the witness belongs to, e.g. "superdifferential", "boundary".
  std::string detail;
  double margin = 0.0;
  bool has_witness = false;

  bool passed() const noexcept { return status != VerdictStatus::fail; }
};

/// Where the Dirichlet condition u = 0 is imposed. Radial candidates on [0,1]
/// only carry it at r = 1; r = 0 is the center of the ball.
enum class BoundaryConvention { both_ends, right_end };

struct CheckOptions {
  double tol = 1e-9;
  BoundaryConvention boundary = BoundaryConvention::both_ends;
  /// Uniform interior samples in addition to every breakpoint of u and f.
  std::size_t samples = 10001;
};

Verdict check_subsolution(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt = {});
Verdict check_supersolution(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt = {});
/// Both checks plus | |u'| - f | <= tol at smooth sample points.
Verdict check_solution(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt = {});

/// Comparison on the zero set A of f: if u <= v + tol on A, checks u <= v + tol
/// on the dense grid (fail on violation); if u > v + tol somewhere on A the
/// hypothesis is not met and the verdict is pass_vacuous.
Verdict check_comparison(const PiecewisePoly& u, const PiecewisePoly& v, const PiecewisePoly& f,
                         const ZeroSet& zeros, const CheckOptions& opt = {});

/// u(r) = int_r^1 V as exact quadratic pieces on V's breakpoints.
PiecewisePoly maximal_radial_solution(const PotentialProfile& V);

}  // namespace eikvv
