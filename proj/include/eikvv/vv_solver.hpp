#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eikvv/error.hpp"
#include "eikvv/potential.hpp"

namespace eikvv {

inline constexpr double kMinEpsilon = 1e-6;
inline constexpr double kMaxEpsilon = 1.0;
inline constexpr int kMinDim = 1;
inline constexpr int kMaxDim = 10;

/// Exponent below which the e^t tail of the p^eps integral is dropped (e^-45 < 1e-19).
inline constexpr double kTCutoff = -45.0;

/// One viscous problem |Du| - V = eps * Laplace(u) on the unit ball in R^dim,
/// u = 0 on the boundary, restricted to radial solutions.
struct ProblemSpec {
  PotentialProfile potential;
  int dim = 1;
  double epsilon = 0.1;

  /// Throws DomainError unless eps in [1e-6, 1] and dim in [1, 10].
  void validate() const;
};

struct QuadratureMeta {
  std::size_t panel_order = 0;
  double t_cutoff = kTCutoff;
  /// Largest number of Gauss-Legendre panels used for a single p^eps value.
  std::size_t max_panels = 0;
  /// Points of the refined Simpson grid.
  std::size_t refined_points = 0;
  double refined_spacing = 0.0;
  /// Richardson estimate |S_h - S_2h| / 15 accumulated over the Simpson sweep.
  double estimated_error = 0.0;
};

struct ViscousSolution {
  ProblemSpec spec;
  std::vector<double> grid;
  std::vector<double> p_values;
  std::vector<double> u_values;
  QuadratureMeta quadrature_meta;
};

/// Radial derivative p^eps(r) = (u^eps)'(r) <= 0, from the shifted-exponent
/// integral -int_{t_min}^0 (1 + eps t / r)^(n-1) e^t V(r + eps t) dt.
double eval_p_eps(const ProblemSpec& spec, double r);

/// Number of Gauss-Legendre panels eval_p_eps uses at radius r.
std::size_t p_eps_panel_count(const ProblemSpec& spec, double r);

/// u^eps on `grid` (strictly increasing, 0 to 1) by a cumulative composite
/// Simpson sweep of -p^eps from 1 inwards.
ViscousSolution eval_u_eps(const ProblemSpec& spec, std::span<const double> grid);

/// Spacing of the refined Simpson grid used for a given epsilon.
double simpson_spacing(double epsilon) noexcept;

/// The vanishing-viscosity limit u(r) = int_r^1 V(s) ds, exact for piecewise-linear V.
double eval_limit(const PotentialProfile& potential, double r);

/// -V(0) / (n eps): every pure second derivative of u^eps at the origin.
double second_derivative_at_zero(const ProblemSpec& spec);

/// Thrown by ode_oracle_p when the grid is too coarse for the stiffness scale.
class SpacingError : public DomainError {
 public:
  SpacingError(double required, double actual);
  double required_spacing() const noexcept { return required_; }
  double actual_spacing() const noexcept { return actual_; }

 private:
  double required_;
  double actual_;
};

/// Independent p^eps evaluator: marches the linear ODE
/// p' + ((n-1)/r + 1/eps) p = -V/eps from the origin with exponential-integrator
/// steps (coefficient frozen at the step midpoint, V linear per step, solved
/// exactly). Grid spacing must be <= eps/8.
std::vector<double> ode_oracle_p(const ProblemSpec& spec, std::span<const double> grid);

/// n + 1 equally spaced radii on [0,1] (n = points - 1).
std::vector<double> uniform_grid(std::size_t points);

}  // namespace eikvv
