#include "eikvv/piecewise_poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "eikvv/error.hpp"
#include "eikvv/kernels.hpp"

namespace eikvv {

PiecewisePoly::PiecewisePoly(std::vector<double> breaks, std::vector<Quadratic> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || breaks_.size() != pieces_.size() + 1) {
    throw DomainError("piecewise polynomial needs K pieces and K+1 breakpoints");
  }
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!std::isfinite(breaks_[i])) throw DomainError("non-finite breakpoint");
    if (i > 0 && !(breaks_[i] > breaks_[i - 1])) {
      throw DomainError("breakpoints must be strictly increasing");
    }
  }
  for (std::size_t k = 0; k + 1 < pieces_.size(); ++k) {
    const double x = breaks_[k + 1];
    const double jump = std::abs(pieces_[k](x) - pieces_[k + 1](x));
    if (!(jump <= kContinuityTol)) {
      std::ostringstream os;
      os.precision(17);
      os << "pieces disagree by " << jump << " at x = " << x;
      throw DomainError(os.str());
    }
  }
}

PiecewisePoly PiecewisePoly::constant(double a, double b, double c) {
  return PiecewisePoly({a, b}, {Quadratic{c, 0.0, 0.0}});
}

PiecewisePoly PiecewisePoly::interpolate_linear(std::span<const double> x,
                                                std::span<const double> y) {
  if (x.size() < 2 || x.size() != y.size()) {
    throw DomainError("linear interpolant needs matching samples, at least two");
  }
  std::vector<Quadratic> pieces;
  pieces.reserve(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double slope = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    pieces.push_back({y[i] - slope * x[i], slope, 0.0});
  }
  std::vector<double> breaks(x.begin(), x.end());
  // samples imported from files carry rounding; re-anchor each piece so the
  // continuity check sees agreement at shared breakpoints
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const double xr = breaks[i + 1];
    const double target = pieces[i](xr);
    pieces[i + 1].c0 += target - pieces[i + 1](xr);
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

PiecewisePoly PiecewisePoly::from_potential(const PotentialProfile& V) {
  const auto b = V.breakpoints();
  const auto v = V.values();
  std::vector<Quadratic> pieces;
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const double slope = V.slope(k);
    pieces.push_back({v[k] - slope * b[k], slope, 0.0});
  }
  return PiecewisePoly(std::vector<double>(b.begin(), b.end()), std::move(pieces));
}

std::size_t PiecewisePoly::piece_of(double x) const noexcept {
  auto it = std::lower_bound(breaks_.begin() + 1, breaks_.end() - 1, x);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

namespace {
void check_in_domain(const PiecewisePoly& u, double x) {
  if (!(x >= u.lo() && x <= u.hi())) throw DomainError("point outside the candidate's domain");
}
}  // namespace

double PiecewisePoly::operator()(double x) const {
  check_in_domain(*this, x);
  return pieces_[piece_of(x)](x);
}

std::ptrdiff_t PiecewisePoly::breakpoint_index(double x, double tol) const noexcept {
  for (std::size_t i = 1; i + 1 < breaks_.size(); ++i) {
    if (std::abs(breaks_[i] - x) <= tol) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

double PiecewisePoly::left_derivative(double x) const {
  check_in_domain(*this, x);
  const auto bi = breakpoint_index(x);
  if (bi >= 0) return pieces_[static_cast<std::size_t>(bi) - 1].derivative(x);
  return pieces_[piece_of(x)].derivative(x);
}

double PiecewisePoly::right_derivative(double x) const {
  check_in_domain(*this, x);
  const auto bi = breakpoint_index(x);
  if (bi >= 0) return pieces_[static_cast<std::size_t>(bi)].derivative(x);
  if (x == lo()) return pieces_.front().derivative(x);
  return pieces_[piece_of(x)].derivative(x);
}

void PiecewisePoly::eval_many(std::span<const double> x, std::span<double> out) const {
  std::vector<double> c0(x.size()), c1(x.size()), c2(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    check_in_domain(*this, x[i]);
    const Quadratic& q = pieces_[piece_of(x[i])];
    c0[i] = q.c0;
    c1[i] = q.c1;
    c2[i] = q.c2;
  }
  kernels::eval_quadratic(x, c0, c1, c2, out);
}

void PiecewisePoly::derivative_many(std::span<const double> x, std::span<double> out) const {
  std::vector<double> c0(x.size()), c1(x.size()), c2(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    check_in_domain(*this, x[i]);
    const Quadratic& q = pieces_[piece_of(x[i])];
    c0[i] = q.c1;
    c1[i] = 2.0 * q.c2;
  }
  kernels::eval_quadratic(x, c0, c1, c2, out);
}

PiecewisePoly evenly_reflect(const PiecewisePoly& u) {
  if (u.lo() != 0.0) throw DomainError("even reflection needs a candidate on [0, b]");
  const auto b = u.breaks();
  const auto p = u.pieces();
  std::vector<double> breaks;
  std::vector<Quadratic> pieces;
  for (std::size_t i = b.size(); i-- > 1;) breaks.push_back(-b[i]);
  for (std::size_t k = p.size(); k-- > 0;) pieces.push_back({p[k].c0, -p[k].c1, p[k].c2});
  breaks.insert(breaks.end(), b.begin(), b.end());
  pieces.insert(pieces.end(), p.begin(), p.end());
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

ZeroSet zero_set(const PiecewisePoly& f, double tol) {
  if (!(tol > 0.0)) throw DomainError("zero_set tolerance must be positive");
  const auto b = f.breaks();
  const auto p = f.pieces();
  std::vector<ZeroInterval> intervals;
  std::vector<double> points;

  for (std::size_t k = 0; k < p.size(); ++k) {
    const double lo = b[k];
    const double hi = b[k + 1];
    const Quadratic& q = p[k];
    const double mid = 0.5 * (lo + hi);
    // a quadratic is pinned by three values
    if (std::abs(q(lo)) <= tol && std::abs(q(mid)) <= tol && std::abs(q(hi)) <= tol) {
      if (!intervals.empty() && intervals.back().hi == lo) {
        intervals.back().hi = hi;
      } else {
        intervals.push_back({lo, hi});
      }
      continue;
    }
    auto consider = [&](double x) {
      if (x >= lo && x <= hi && std::abs(q(x)) <= tol) points.push_back(x);
    };
    consider(lo);
    consider(hi);
    if (q.c2 != 0.0) {
      const double vertex = -q.c1 / (2.0 * q.c2);
      consider(vertex);
      const double disc = q.c1 * q.c1 - 4.0 * q.c2 * q.c0;
      if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        const double t = -0.5 * (q.c1 + std::copysign(sq, q.c1));
        if (t != 0.0) {
          consider(t / q.c2);
          consider(q.c0 / t);
        }
      }
    } else if (q.c1 != 0.0) {
      consider(-q.c0 / q.c1);
    }
  }

  std::sort(points.begin(), points.end());
  ZeroSet zs;
  zs.intervals = std::move(intervals);
  for (double x : points) {
    const bool covered = std::any_of(zs.intervals.begin(), zs.intervals.end(), [&](const auto& iv) {
      return x >= iv.lo - 1e-12 && x <= iv.hi + 1e-12;
    });
    if (covered) continue;
    if (!zs.points.empty() && std::abs(x - zs.points.back()) <= 1e-12) continue;
    zs.points.push_back(x);
  }
  return zs;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

double to_number(const std::string& tok, std::size_t line) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(x)) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  return x;
}

}  // namespace

PiecewisePoly parse_candidate(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t expected = 0;
  bool have_header = false;
  std::vector<double> breaks;
  std::vector<Quadratic> pieces;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tok = split_ws(raw);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "pp") throw ParseError(line_no, "expected 'pp <K>' header");
      const double k = to_number(tok[1], line_no);
      if (k < 1 || k != std::floor(k)) throw ParseError(line_no, "piece count must be a positive integer");
      expected = static_cast<std::size_t>(k);
      have_header = true;
      continue;
    }
    if (tok.size() != 5) throw ParseError(line_no, "expected 'x_lo x_hi c0 c1 c2'");
    if (pieces.size() == expected) throw ParseError(line_no, "more pieces than announced");
    const double lo = to_number(tok[0], line_no);
    const double hi = to_number(tok[1], line_no);
    if (!(hi > lo)) throw ParseError(line_no, "empty piece interval");
    if (breaks.empty()) {
      breaks.push_back(lo);
    } else if (lo != breaks.back()) {
      throw ParseError(line_no, "piece does not start where the previous one ended");
    }
    breaks.push_back(hi);
    pieces.push_back({to_number(tok[2], line_no), to_number(tok[3], line_no), to_number(tok[4], line_no)});
  }
  if (!have_header) throw ParseError(0, "empty candidate file");
  if (pieces.size() != expected) throw ParseError(line_no, "fewer pieces than announced");
  try {
    return PiecewisePoly(std::move(breaks), std::move(pieces));
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

PiecewisePoly parse_candidate(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_candidate(in);
}

void write_candidate(std::ostream& out, const PiecewisePoly& u) {
  const auto b = u.breaks();
  const auto p = u.pieces();
  const auto old = out.precision(17);
  out << "pp " << p.size() << '\n';
  for (std::size_t k = 0; k < p.size(); ++k) {
    out << b[k] << ' ' << b[k + 1] << ' ' << p[k].c0 << ' ' << p[k].c1 << ' ' << p[k].c2 << '\n';
  }
  out.precision(old);
}

}  // namespace eikvv
