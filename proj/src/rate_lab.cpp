#include "eikvv/rate_lab.hpp"

#include <algorithm>
#include <cmath>

#include "eikvv/error.hpp"
#include "eikvv/parallel.hpp"
#include "eikvv/vv_solver.hpp"

namespace eikvv {

std::vector<double> default_epsilon_sweep() {
  return {1e-1, std::pow(10.0, -1.5), 1e-2, std::pow(10.0, -2.5), 1e-3};
}

double rate_weight(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("rate weight needs 0 < r <= 1");
  return 1.0 - r - std::log(r);
}

double rate_abscissa(double epsilon) { return epsilon * std::abs(std::log(epsilon)); }

namespace {

RateFit least_squares(std::span<const double> epsilons, std::span<const double> errors,
                      bool log_weighted, std::size_t min_points) {
  if (epsilons.size() != errors.size()) throw DomainError("epsilons and errors differ in length");
  RateFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !(epsilons[i] > 0.0) || (log_weighted && epsilons[i] >= 1.0)) {
      fit.excluded.push_back(i);
      continue;
    }
    xs.push_back(std::log(log_weighted ? rate_abscissa(epsilons[i]) : epsilons[i]));
    ys.push_back(std::log(errors[i]));
  }
  if (xs.size() < min_points) {
    throw DomainError("rate fit needs at least " + std::to_string(min_points) +
                      " positive data points, got " + std::to_string(xs.size()));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DomainError("rate fit needs distinct epsilons");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.residual_norm = std::sqrt(rss);
  return fit;
}

void check_sweep(std::span<const double> epsilons) {
  if (epsilons.empty()) throw DomainError("epsilon list is empty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw DomainError("epsilons must be strictly decreasing");
    }
  }
}

}  // namespace

RateFit fit_rate(std::span<const double> epsilons, std::span<const double> errors) {
  return least_squares(epsilons, errors, true, 3);
}

RateFit fit_power_law(std::span<const double> epsilons, std::span<const double> errors) {
  return least_squares(epsilons, errors, false, 2);
}

RateReport run_convergence(const PotentialProfile& V, int dim, std::span<const double> epsilons,
                           double r_min, std::size_t grid_size) {
  if (!(r_min > 0.0 && r_min < 1.0)) {
    throw DomainError("r_min must lie in (0,1); the rate bound blows up as r -> 0");
  }
  if (grid_size < 101) throw DomainError("grid_size must be at least 101");
  check_sweep(epsilons);
  for (double eps : epsilons) {
    if (!(eps >= kMinEpsilon && eps < kMaxEpsilon)) {
      throw DomainError("rate sweep needs eps in [1e-6, 1); eps|log eps| vanishes at 1");
    }
  }
  ProblemSpec{V, dim, epsilons.front()}.validate();

  RateReport rep;
  rep.potential = V.label();
  rep.dim = dim;
  rep.r_min = r_min;
  rep.grid_size = grid_size;
  rep.epsilons.assign(epsilons.begin(), epsilons.end());

  // designated radii join the uniform grid so their errors are exact grid values
  const std::vector<double> designated{0.0, r_min, 0.5, 0.9};
  std::vector<double> grid = uniform_grid(grid_size);
  grid.insert(grid.end(), designated.begin(), designated.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> limit(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) limit[i] = eval_limit(V, grid[i]);

  const std::size_t m = epsilons.size();
  rep.sup_errors.assign(m, 0.0);
  rep.full_sup_errors.assign(m, 0.0);
  rep.bound_constants.assign(m, 0.0);
  for (double r : designated) rep.pointwise_errors.push_back({r, std::vector<double>(m, 0.0)});

  parallel_for(m, [&](std::size_t e) {
    const double eps = epsilons[e];
    const ViscousSolution sol = eval_u_eps(ProblemSpec{V, dim, eps}, grid);
    const double scale = rate_abscissa(eps);
    double sup = 0.0;
    double full = 0.0;
    double c = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double err = std::abs(sol.u_values[i] - limit[i]);
      full = std::max(full, err);
      if (grid[i] >= r_min) {
        sup = std::max(sup, err);
        // r = 1 is excluded: w(1) = 0 and both solutions vanish there
        if (grid[i] < 1.0) c = std::max(c, err / (scale * rate_weight(grid[i])));
      }
      for (auto& pe : rep.pointwise_errors) {
        if (pe.r == grid[i]) pe.errors[e] = err;
      }
    }
    rep.sup_errors[e] = sup;
    rep.full_sup_errors[e] = full;
    rep.bound_constants[e] = c;
  });

  const bool all_zero = std::all_of(rep.sup_errors.begin(), rep.sup_errors.end(),
                                    [](double x) { return x == 0.0; });
  if (!all_zero && m >= 3) {
    rep.fitted_slope = fit_rate(rep.epsilons, rep.sup_errors).slope;
    rep.fitted_slope_plain = fit_power_law(rep.epsilons, rep.sup_errors).slope;
  }
  return rep;
}

ZeroProbe zero_point_probe(const PotentialProfile& V, int dim, std::span<const double> epsilons) {
  check_sweep(epsilons);
  ZeroProbe probe;
  probe.potential = V.label();
  probe.dim = dim;
  probe.epsilons.assign(epsilons.begin(), epsilons.end());
  probe.errors.assign(epsilons.size(), 0.0);
  const double u0 = eval_limit(V, 0.0);
  const std::vector<double> ends{0.0, 1.0};
  parallel_for(epsilons.size(), [&](std::size_t e) {
    const ViscousSolution sol = eval_u_eps(ProblemSpec{V, dim, epsilons[e]}, ends);
    probe.errors[e] = std::abs(sol.u_values.front() - u0);
  });
  for (std::size_t i = 1; i < probe.errors.size(); ++i) {
    if (probe.errors[i] > probe.errors[i - 1]) probe.monotone_decreasing = false;
  }
  const auto positive = std::count_if(probe.errors.begin(), probe.errors.end(),
                                      [](double x) { return x > 0.0; });
  if (positive >= 2) probe.empirical_slope = fit_power_law(probe.epsilons, probe.errors).slope;
  return probe;
}

}  // namespace eikvv
