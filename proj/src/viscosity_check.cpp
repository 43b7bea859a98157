#include "eikvv/viscosity_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "eikvv/error.hpp"

namespace eikvv {

namespace {

// One-sided derivatives closer than this are treated as a differentiable point.
constexpr double kKinkTol = 1e-12;

struct OneSided {
  double left;
  double right;
  bool kink;
};

OneSided one_sided(const PiecewisePoly& u, double x) {
  const double dl = u.left_derivative(x);
  const double dr = u.right_derivative(x);
  const double scale = std::max({1.0, std::abs(dl), std::abs(dr)});
  return {dl, dr, std::abs(dl - dr) > kKinkTol * scale};
}

void require_open_interval(const PiecewisePoly& u, double x) {
  if (!(x > u.lo() && x < u.hi())) throw DomainError("differential requested outside the open interval");
}

std::optional<SlopeInterval> super_from(const OneSided& d) {
  if (!d.kink) return SlopeInterval{d.left, d.left};
  if (d.right <= d.left) return SlopeInterval{d.right, d.left};
  return std::nullopt;
}

std::optional<SlopeInterval> sub_from(const OneSided& d) {
  if (!d.kink) return SlopeInterval{d.left, d.left};
  if (d.left <= d.right) return SlopeInterval{d.left, d.right};
  return std::nullopt;
}

void require_same_domain(const PiecewisePoly& a, const PiecewisePoly& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw DomainError("candidates live on different intervals");
}

// Interior sample points: uniform grid plus every interior breakpoint.
std::vector<double> interior_samples(const PiecewisePoly& u, const PiecewisePoly& f,
                                     std::size_t samples) {
  const double a = u.lo();
  const double b = u.hi();
  std::vector<double> xs;
  const std::size_t n = std::max<std::size_t>(samples, 3);
  xs.reserve(n + u.breaks().size() + f.breaks().size());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    xs.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  for (double x : u.breaks()) {
    if (x > a && x < b) xs.push_back(x);
  }
  for (double x : f.breaks()) {
    if (x > a && x < b) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Running minimum of slack over all tested inequalities.
class SlackTracker {
 public:
  explicit SlackTracker(VerdictRole role) { v_.role = role; }

  void observe(double slack, double x, double lhs, double rhs, const char* relation,
               const char* detail) {
    if (slack < v_.margin || !seen_) {
      v_.margin = slack;
      v_.witness_x = x;
      v_.lhs = lhs;
      v_.rhs = rhs;
      v_.relation = relation;
      v_.detail = detail;
      seen_ = true;
    }
  }

  // `other` must come from finish(); its witness fields always hold the tightest point.
  void merge(const Verdict& other) {
    if (!other.relation.empty()) {
      observe(other.margin, other.witness_x, other.lhs, other.rhs, other.relation.c_str(),
              other.detail.c_str());
    }
  }

  Verdict finish(double tol) {
    v_.status = (seen_ && v_.margin < -tol) ? VerdictStatus::fail : VerdictStatus::pass;
    v_.has_witness = v_.status == VerdictStatus::fail;
    return v_;
  }

 private:
  Verdict v_{};
  bool seen_ = false;
};

enum class Kind { sub, super, equality };

// Shared scan: evaluates f and u' in batches, patches breakpoints of u with
// one-sided derivatives and feeds every inequality of `kind` to the tracker.
void scan(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt, Kind kind,
          SlackTracker& tr) {
  const auto xs = interior_samples(u, f, opt.samples);
  std::vector<double> fx(xs.size());
  std::vector<double> du(xs.size());
  f.eval_many(xs, fx);
  u.derivative_many(xs, du);

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    OneSided d{du[i], du[i], false};
    if (u.breakpoint_index(x) >= 0) d = one_sided(u, x);

    switch (kind) {
      case Kind::sub:
        if (const auto s = super_from(d)) {
          const double lhs = std::max(std::abs(s->lo), std::abs(s->hi));
          tr.observe(fx[i] - lhs, x, lhs, fx[i], "<=", d.kink ? "superdifferential-kink" : "superdifferential");
        }
        break;
      case Kind::super:
        if (const auto s = sub_from(d)) {
          const double lhs = (s->lo <= 0.0 && s->hi >= 0.0) ? 0.0 : std::min(std::abs(s->lo), std::abs(s->hi));
          tr.observe(lhs - fx[i], x, lhs, fx[i], ">=", d.kink ? "subdifferential-kink" : "subdifferential");
        }
        break;
      case Kind::equality:
        if (!d.kink) {
          const double lhs = std::abs(d.left);
          tr.observe(-std::abs(lhs - fx[i]), x, lhs, fx[i], "==", "equation");
        }
        break;
    }
  }
}

void boundary(const PiecewisePoly& u, const CheckOptions& opt, bool upper, SlackTracker& tr) {
  auto test = [&](double x) {
    const double ux = u(x);
    if (upper) {
      tr.observe(-ux, x, ux, 0.0, "<=", "boundary");
    } else {
      tr.observe(ux, x, ux, 0.0, ">=", "boundary");
    }
  };
  if (opt.boundary == BoundaryConvention::both_ends) test(u.lo());
  test(u.hi());
}

}  // namespace

std::optional<SlopeInterval> superdifferential_at(const PiecewisePoly& u, double x) {
  require_open_interval(u, x);
  return super_from(one_sided(u, x));
}

std::optional<SlopeInterval> subdifferential_at(const PiecewisePoly& u, double x) {
  require_open_interval(u, x);
  return sub_from(one_sided(u, x));
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass:
      return "pass";
    case VerdictStatus::fail:
      return "fail";
    case VerdictStatus::pass_vacuous:
      return "pass-vacuous";
  }
  return "unknown";
}

std::string to_string(VerdictRole r) {
  switch (r) {
    case VerdictRole::subsolution:
      return "subsolution";
    case VerdictRole::supersolution:
      return "supersolution";
    case VerdictRole::solution:
      return "solution";
    case VerdictRole::comparison:
      return "comparison";
  }
  return "unknown";
}

Verdict check_subsolution(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt) {
  require_same_domain(u, f);
  SlackTracker tr(VerdictRole::subsolution);
  scan(u, f, opt, Kind::sub, tr);
  boundary(u, opt, true, tr);
  return tr.finish(opt.tol);
}

Verdict check_supersolution(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt) {
  require_same_domain(u, f);
  SlackTracker tr(VerdictRole::supersolution);
  scan(u, f, opt, Kind::super, tr);
  boundary(u, opt, false, tr);
  return tr.finish(opt.tol);
}

Verdict check_solution(const PiecewisePoly& u, const PiecewisePoly& f, const CheckOptions& opt) {
  SlackTracker tr(VerdictRole::solution);
  tr.merge(check_subsolution(u, f, opt));
  tr.merge(check_supersolution(u, f, opt));
  scan(u, f, opt, Kind::equality, tr);
  return tr.finish(opt.tol);
}

Verdict check_comparison(const PiecewisePoly& u, const PiecewisePoly& v, const PiecewisePoly& f,
                         const ZeroSet& zeros, const CheckOptions& opt) {
  require_same_domain(u, v);
  require_same_domain(u, f);

  // hypothesis: u <= v on A
  std::vector<double> on_a;
  for (double x : zeros.points) on_a.push_back(x);
  for (const auto& iv : zeros.intervals) {
    constexpr std::size_t kPerInterval = 1001;
    for (std::size_t i = 0; i < kPerInterval; ++i) {
      on_a.push_back(iv.lo + (iv.hi - iv.lo) * static_cast<double>(i) / (kPerInterval - 1));
    }
  }
  SlackTracker hyp(VerdictRole::comparison);
  for (double x : on_a) {
    if (x < u.lo() || x > u.hi()) continue;
    const double ux = u(x);
    const double vx = v(x);
    hyp.observe(vx - ux, x, ux, vx, "<=", "hypothesis");
  }
  Verdict h = hyp.finish(opt.tol);
  if (h.status == VerdictStatus::fail) {
    h.status = VerdictStatus::pass_vacuous;
    h.detail = "hypothesis-not-met";
    h.has_witness = true;
    return h;
  }

  // conclusion: u <= v on the whole interval
  std::vector<double> xs = interior_samples(u, f, opt.samples);
  for (double x : v.breaks()) xs.push_back(x);
  xs.push_back(u.lo());
  xs.push_back(u.hi());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> ux(xs.size());
  std::vector<double> vx(xs.size());
  u.eval_many(xs, ux);
  v.eval_many(xs, vx);
  SlackTracker con(VerdictRole::comparison);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    con.observe(vx[i] - ux[i], xs[i], ux[i], vx[i], "<=", "conclusion");
  }
  return con.finish(opt.tol);
}

PiecewisePoly maximal_radial_solution(const PotentialProfile& V) {
  const auto b = V.breakpoints();
  const auto v = V.values();
  const std::size_t segs = b.size() - 1;
  std::vector<Quadratic> pieces(segs);
  // on [b_k, b_{k+1}] with V = alpha + beta s:
  // u(r) = U_{k+1} + alpha (b_{k+1} - r) + beta/2 (b_{k+1}^2 - r^2)
  double right_value = 0.0;
  for (std::size_t k = segs; k-- > 0;) {
    const double beta = V.slope(k);
    const double alpha = v[k] - beta * b[k];
    const double x1 = b[k + 1];
    pieces[k] = {right_value + alpha * x1 + 0.5 * beta * x1 * x1, -alpha, -0.5 * beta};
    right_value += 0.5 * (v[k] + v[k + 1]) * (b[k + 1] - b[k]);
  }
  return PiecewisePoly(std::vector<double>(b.begin(), b.end()), std::move(pieces));
}

}  // namespace eikvv
