#include "eikvv/vv_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eikvv/gauss_legendre.hpp"
#include "eikvv/kernels.hpp"
#include "eikvv/parallel.hpp"

namespace eikvv {

void ProblemSpec::validate() const {
  if (!(epsilon >= kMinEpsilon && epsilon <= kMaxEpsilon)) {
    std::ostringstream os;
    os << "epsilon " << epsilon << " outside [" << kMinEpsilon << ", " << kMaxEpsilon << "]";
    throw DomainError(os.str());
  }
  if (dim < kMinDim || dim > kMaxDim) {
    throw DomainError("dimension " + std::to_string(dim) + " outside [1, 10]");
  }
}

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius outside [0,1]");
}

// Panel nodes, scaled weights and V samples for one p^eps evaluation.
struct PanelBuffer {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> v;
  std::size_t panels = 0;

  void clear() {
    x.clear();
    w.clear();
    v.clear();
    panels = 0;
  }
};

// V at radius s on a known segment k; tolerates s a rounding error outside it.
double v_on_segment(const PotentialProfile& V, std::size_t k, double s) {
  const auto b = V.breakpoints();
  const auto vals = V.values();
  return vals[k] + V.slope(k) * (s - b[k]);
}

// Appends Gauss-Legendre panels of width <= max_width covering [lo, hi] in the
// integration variable. `radius_of` maps the variable to the radius s, which
// stays on V's segment k throughout.
template <class RadiusOf>
void add_panels(PanelBuffer& buf, const PotentialProfile& V, std::size_t k, double lo, double hi,
                double max_width, RadiusOf radius_of) {
  if (!(hi > lo)) return;
  const auto& rule = gauss_legendre8();
  const auto count = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / max_width)));
  const double width = (hi - lo) / static_cast<double>(count);
  for (std::size_t p = 0; p < count; ++p) {
    const double a = lo + static_cast<double>(p) * width;
    const double b = (p + 1 == count) ? hi : a + width;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t j = 0; j < kPanelOrder; ++j) {
      const double x = mid + half * rule.nodes[j];
      buf.x.push_back(x);
      buf.w.push_back(half * rule.weights[j]);
      buf.v.push_back(v_on_segment(V, k, radius_of(x)));
    }
  }
  buf.panels += count;
}

// Cut points of [lo, hi] at the images of V's interior breakpoints.
// `var_of` maps a radius to the integration variable (monotone increasing).
template <class VarOf>
std::vector<double> cuts(const PotentialProfile& V, double s_lo, double s_hi, double lo, double hi,
                         VarOf var_of) {
  std::vector<double> c{lo};
  for (double b : V.breakpoints()) {
    if (b > s_lo && b < s_hi) {
      const double t = var_of(b);
      if (t > c.back() && t < hi) c.push_back(t);
    }
  }
  c.push_back(hi);
  return c;
}

// Fills `buf` and returns the kernel parameters plus the prefactor of -p^eps.
struct Integrand {
  kernels::ExpPolyParams params;
  double prefactor = 1.0;
};

Integrand build_panels(const ProblemSpec& spec, double r, PanelBuffer& buf) {
  const PotentialProfile& V = spec.potential;
  const double eps = spec.epsilon;
  buf.clear();
  Integrand out;
  out.params.power = spec.dim - 1;

  if (r >= eps) {
    // t = (s - r) / eps, integrand (1 + eps t / r)^(n-1) e^t V(r + eps t)
    const double t_lo = std::max(-r / eps, kTCutoff);
    const double s_lo = r + eps * t_lo;
    const auto c = cuts(V, s_lo, r, t_lo, 0.0, [&](double s) { return (s - r) / eps; });
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      const double s_mid = std::clamp(r + eps * 0.5 * (c[i] + c[i + 1]), 0.0, 1.0);
      add_panels(buf, V, V.segment_of(s_mid), c[i], c[i + 1], 1.0,
                 [&](double t) { return r + eps * t; });
    }
    out.params.exp_scale = 1.0;
    out.params.exp_shift = 0.0;
    out.params.base_scale = eps / r;
    out.params.base_shift = 1.0;
    out.prefactor = 1.0;
  } else {
    // r < eps: s = r sigma, integrand sigma^(n-1) e^{(r/eps)(sigma - 1)} V(r sigma), times r/eps.
    // One t-unit is eps/r > 1 sigma-units, so a single panel per segment suffices.
    const auto c = cuts(V, 0.0, r, 0.0, 1.0, [&](double s) { return s / r; });
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      const double s_mid = std::clamp(r * 0.5 * (c[i] + c[i + 1]), 0.0, 1.0);
      add_panels(buf, V, V.segment_of(s_mid), c[i], c[i + 1], 1.0,
                 [&](double sigma) { return r * sigma; });
    }
    out.params.exp_scale = r / eps;
    out.params.exp_shift = -r / eps;
    out.params.base_scale = 1.0;
    out.params.base_shift = 0.0;
    out.prefactor = r / eps;
  }
  return out;
}

double p_eps_unchecked(const ProblemSpec& spec, double r, PanelBuffer& buf) {
  if (r == 0.0) return 0.0;
  const Integrand in = build_panels(spec, r, buf);
  const double integral = kernels::exp_poly_sum(buf.x, buf.w, buf.v, in.params);
  return -in.prefactor * integral;
}

void check_grid(std::span<const double> grid) {
  if (grid.size() < 2) throw DomainError("grid needs at least two radii");
  if (grid.front() != 0.0 || grid.back() != 1.0) throw DomainError("grid must span [0,1]");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("grid must be strictly increasing");
  }
}

}  // namespace

double eval_p_eps(const ProblemSpec& spec, double r) {
  spec.validate();
  check_radius(r);
  thread_local PanelBuffer buf;
  return p_eps_unchecked(spec, r, buf);
}

std::size_t p_eps_panel_count(const ProblemSpec& spec, double r) {
  spec.validate();
  check_radius(r);
  if (r == 0.0) return 0;
  PanelBuffer buf;
  build_panels(spec, r, buf);
  return buf.panels;
}

double simpson_spacing(double epsilon) noexcept { return std::min(epsilon / 16.0, 1e-3); }

ViscousSolution eval_u_eps(const ProblemSpec& spec, std::span<const double> grid) {
  spec.validate();
  check_grid(grid);

  // knots: the output grid plus V's interior breakpoints, where p^eps'' jumps
  std::vector<double> knots(grid.begin(), grid.end());
  for (double b : spec.potential.breakpoints()) knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  // every knot interval gets a multiple of 4 Simpson subintervals so the
  // half-resolution rule for the error estimate is available
  const double h_max = simpson_spacing(spec.epsilon);
  std::vector<std::size_t> offset(knots.size());
  std::size_t total = 0;
  for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
    offset[j] = total;
    const double len = knots[j + 1] - knots[j];
    const auto m = 4 * static_cast<std::size_t>(std::max(1.0, std::ceil(len / (4.0 * h_max))));
    total += m;
  }
  offset.back() = total;

  std::vector<double> s(total + 1);
  for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
    const std::size_t m = offset[j + 1] - offset[j];
    const double h = (knots[j + 1] - knots[j]) / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) s[offset[j] + i] = knots[j] + static_cast<double>(i) * h;
  }
  s[total] = 1.0;

  std::vector<double> p(s.size());
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (s.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    thread_local PanelBuffer buf;
    const std::size_t end = std::min(s.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) p[i] = p_eps_unchecked(spec, s[i], buf);
  });

  std::vector<double> u_knot(knots.size(), 0.0);
  double err = 0.0;
  for (std::size_t j = knots.size() - 1; j-- > 0;) {
    const std::size_t o = offset[j];
    const std::size_t m = offset[j + 1] - o;
    const double h = (knots[j + 1] - knots[j]) / static_cast<double>(m);
    double fine = p[o] + p[o + m];
    for (std::size_t i = 1; i < m; ++i) fine += (i % 2 == 1 ? 4.0 : 2.0) * p[o + i];
    fine *= h / 3.0;
    double coarse = p[o] + p[o + m];
    for (std::size_t i = 2; i < m; i += 2) coarse += ((i / 2) % 2 == 1 ? 4.0 : 2.0) * p[o + i];
    coarse *= 2.0 * h / 3.0;
    err += std::abs(fine - coarse) / 15.0;
    // u(knot_j) = u(knot_{j+1}) - int_{knot_j}^{knot_{j+1}} p
    u_knot[j] = u_knot[j + 1] - fine;
  }

  ViscousSolution sol{spec, std::vector<double>(grid.begin(), grid.end()), {}, {}, {}};
  sol.p_values.resize(grid.size());
  sol.u_values.resize(grid.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    while (knots[j] != grid[i]) ++j;
    sol.u_values[i] = u_knot[j];
    sol.p_values[i] = p[offset[j]];
  }
  sol.u_values.back() = 0.0;

  auto& meta = sol.quadrature_meta;
  meta.panel_order = kPanelOrder;
  meta.t_cutoff = kTCutoff;
  meta.max_panels = p_eps_panel_count(spec, 1.0);
  meta.refined_points = s.size();
  meta.refined_spacing = h_max;
  meta.estimated_error = err;
  return sol;
}

double eval_limit(const PotentialProfile& potential, double r) {
  check_radius(r);
  const auto b = potential.breakpoints();
  const auto v = potential.values();
  const std::size_t k = potential.segment_of(r);
  const double vr = potential(r);
  double sum = 0.5 * (vr + v[k + 1]) * (b[k + 1] - r);
  for (std::size_t j = k + 1; j + 1 < b.size(); ++j) sum += 0.5 * (v[j] + v[j + 1]) * (b[j + 1] - b[j]);
  return sum;
}

double second_derivative_at_zero(const ProblemSpec& spec) {
  spec.validate();
  return -spec.potential(0.0) / (static_cast<double>(spec.dim) * spec.epsilon);
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw DomainError("uniform grid needs at least two points");
  std::vector<double> g(points);
  const double n = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) g[i] = static_cast<double>(i) / n;
  g.back() = 1.0;
  return g;
}

}  // namespace eikvv
