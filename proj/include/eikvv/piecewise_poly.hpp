#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "eikvv/potential.hpp"

namespace eikvv {

/// c0 + c1 x + c2 x^2 in the global coordinate x.
struct Quadratic {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double operator()(double x) const noexcept { return c0 + x * (c1 + x * c2); }
  double derivative(double x) const noexcept { return c1 + 2.0 * c2 * x; }
};

/// Continuous piecewise polynomial of degree <= 2 on [x_0, x_K].
/// Candidate solutions and right-hand sides of |u'| = f share this form.
class PiecewisePoly {
 public:
  static constexpr double kContinuityTol = 1e-12;

  PiecewisePoly() = default;
  /// `breaks` has pieces.size() + 1 strictly increasing entries. Throws
  /// DomainError if the pieces disagree at a shared breakpoint by more than
  /// kContinuityTol.
  PiecewisePoly(std::vector<double> breaks, std::vector<Quadratic> pieces);

  static PiecewisePoly constant(double a, double b, double c);
  /// Piecewise-linear interpolant of (x_i, y_i).
  static PiecewisePoly interpolate_linear(std::span<const double> x, std::span<const double> y);
  /// V as a piecewise-linear PiecewisePoly on [0,1].
  static PiecewisePoly from_potential(const PotentialProfile& V);

  double lo() const noexcept { return breaks_.front(); }
  double hi() const noexcept { return breaks_.back(); }
  std::span<const double> breaks() const noexcept { return breaks_; }
  std::span<const Quadratic> pieces() const noexcept { return pieces_; }

  /// Piece containing x; at an interior breakpoint, the piece on its left.
  std::size_t piece_of(double x) const noexcept;

  double operator()(double x) const;
  /// One-sided derivatives at x (equal away from breakpoints).
  double left_derivative(double x) const;
  double right_derivative(double x) const;

  /// Index of the interior breakpoint at x, or -1.
  std::ptrdiff_t breakpoint_index(double x, double tol = 1e-14) const noexcept;

  /// Batched evaluation through the SIMD kernel.
  void eval_many(std::span<const double> x, std::span<double> out) const;
  void derivative_many(std::span<const double> x, std::span<double> out) const;

 private:
  std::vector<double> breaks_;
  std::vector<Quadratic> pieces_;
};

/// Even reflection of a candidate on [0, b] to [-b, b]: u(-x) = u(x).
PiecewisePoly evenly_reflect(const PiecewisePoly& u);

/// Zero set of a nonnegative piecewise polynomial f (roots and flat-zero pieces).
ZeroSet zero_set(const PiecewisePoly& f, double tol = kDefaultZeroTol);

/// Candidate file format: `pp <K>` then K lines `x_lo x_hi c0 c1 c2`.
PiecewisePoly parse_candidate(std::istream& in);
PiecewisePoly parse_candidate(std::string_view text);
void write_candidate(std::ostream& out, const PiecewisePoly& u);

}  // namespace eikvv
