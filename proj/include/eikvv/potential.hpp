#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eikvv {

enum class PotentialKind { constant, vee, piecewise_linear };

/// A nonnegative Lipschitz radial potential V on [0,1].
///
/// Every kind is stored as a continuous piecewise-linear function: the
/// builtins are exactly piecewise linear, so evaluation, the zero set and the
/// antiderivative are all exact. Immutable after construction.
class PotentialProfile {
 public:
  static PotentialProfile constant(double c);
  /// V(r) = |r - center|.
  static PotentialProfile vee(double center);
  /// Breakpoints strictly increasing from 0 to 1, values nonnegative.
  static PotentialProfile piecewise_linear(std::vector<double> breakpoints,
                                           std::vector<double> values);

  PotentialKind kind() const noexcept { return kind_; }
  /// Parameter of the builtin kinds (c for constant, center for vee).
  double parameter() const noexcept { return parameter_; }

  double operator()(double r) const;

  double sup_bound() const noexcept { return sup_bound_; }
  double lipschitz() const noexcept { return lipschitz_; }

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Index k of the segment [b_k, b_{k+1}] containing r (the left one at a breakpoint).
  std::size_t segment_of(double r) const noexcept;
  /// Slope of V on segment k.
  double slope(std::size_t k) const noexcept;

  /// Short identifier: `const:<c>`, `vee:<center>` or `pl[<n> points]`.
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  PotentialProfile(PotentialKind kind, double parameter, std::vector<double> breakpoints,
                   std::vector<double> values);

  PotentialKind kind_;
  double parameter_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  double sup_bound_ = 0.0;
  double lipschitz_ = 0.0;
  std::string label_;
};

struct ZeroInterval {
  double lo;
  double hi;
};

/// The set {V = 0}: isolated points plus intervals where V vanishes identically.
struct ZeroSet {
  std::vector<double> points;
  std::vector<ZeroInterval> intervals;

  bool empty() const noexcept { return points.empty() && intervals.empty(); }
};

inline constexpr double kDefaultZeroTol = 1e-12;

double eval_potential(const PotentialProfile& profile, double r);

ZeroSet zero_set(const PotentialProfile& profile, double tol = kDefaultZeroTol);

/// Reads the potential file format:
///
///     const <c>
///
/// or
///
///     pl
///     <r> <V(r)>
///     ...
///
/// `#` starts a comment line; blank lines are ignored.
PotentialProfile parse_potential(std::istream& in);
PotentialProfile parse_potential(std::string_view text);

/// `const:<c>`, `vee:<center>`, or a path to a potential file.
PotentialProfile potential_from_spec(const std::string& spec);

}  // namespace eikvv
