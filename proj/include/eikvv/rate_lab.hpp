#pragma once

#include <span>
#include <string>
#include <vector>

#include "eikvv/potential.hpp"

namespace eikvv {

/// Default sweep eps = 10^-1, 10^-1.5, 10^-2, 10^-2.5, 10^-3.
std::vector<double> default_epsilon_sweep();

/// w(r) = 1 - r - log r, the radial weight of the eps|log eps| error bound.
double rate_weight(double r);

/// eps |log eps|.
double rate_abscissa(double epsilon);

struct PointwiseError {
  double r;
  std::vector<double> errors;  // one per epsilon
};

struct RateReport {
  std::string potential;
  int dim = 1;
  double r_min = 0.1;
  std::size_t grid_size = 0;
  std::vector<double> epsilons;
  /// sup over grid radii r >= r_min of |u^eps - u|.
  std::vector<double> sup_errors;
  /// sup over the whole grid, r = 0 included.
  std::vector<double> full_sup_errors;
  /// |u^eps - u| at fixed radii (r = 0 is reported but never fitted).
  std::vector<PointwiseError> pointwise_errors;
  /// sup over r in [r_min, 1) of |u^eps - u| / (eps|log eps| w(r)).
  std::vector<double> bound_constants;
  /// Slope of log(sup_error) against log(eps|log eps|).
  double fitted_slope = 0.0;
  /// Slope of log(sup_error) against log(eps), reported alongside.
  double fitted_slope_plain = 0.0;
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;
  /// Indices dropped because the error was not positive.
  std::vector<std::size_t> excluded;
};

/// Least squares of log(error) on log(eps|log eps|). Needs >= 3 positive errors.
RateFit fit_rate(std::span<const double> epsilons, std::span<const double> errors);

/// Least squares of log(error) on log(eps), same exclusion rules; needs >= 2 points.
RateFit fit_power_law(std::span<const double> epsilons, std::span<const double> errors);

/// Solves for every eps (in parallel), compares with the exact limit and fits.
/// Requires 0 < r_min < 1, eps in [1e-6, 1), grid_size >= 101.
RateReport run_convergence(const PotentialProfile& V, int dim, std::span<const double> epsilons,
                           double r_min, std::size_t grid_size);

struct ZeroProbe {
  std::string potential;
  int dim = 1;
  std::vector<double> epsilons;
  std::vector<double> errors;  // |u^eps(0) - u(0)|
  /// Empirical slope of log error vs log eps; 0 if fewer than two positive errors.
  double empirical_slope = 0.0;
  bool monotone_decreasing = true;
  static constexpr const char* kNote = "no theoretical rate claimed at r = 0";
};

ZeroProbe zero_point_probe(const PotentialProfile& V, int dim, std::span<const double> epsilons);

}  // namespace eikvv
