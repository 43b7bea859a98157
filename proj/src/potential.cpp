#include "eikvv/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <istream>
#include <sstream>

#include "eikvv/error.hpp"

namespace eikvv {

namespace {

// Shortest text that round-trips.
std::string format_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void validate_piecewise(const std::vector<double>& b, const std::vector<double>& v) {
  if (b.size() < 2 || b.size() != v.size()) {
    throw DomainError("piecewise-linear potential needs at least two (r, V) pairs");
  }
  if (b.front() != 0.0 || b.back() != 1.0) {
    throw DomainError("piecewise-linear breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b[i]) || !std::isfinite(v[i])) {
      throw DomainError("potential breakpoints and values must be finite");
    }
    if (v[i] < 0.0) throw DomainError("potential values must be nonnegative");
    if (i > 0 && !(b[i] > b[i - 1])) {
      throw DomainError("piecewise-linear breakpoints must be strictly increasing");
    }
  }
}

}  // namespace

PotentialProfile::PotentialProfile(PotentialKind kind, double parameter,
                                   std::vector<double> breakpoints, std::vector<double> values)
    : kind_(kind),
      parameter_(parameter),
      breakpoints_(std::move(breakpoints)),
      values_(std::move(values)) {
  validate_piecewise(breakpoints_, values_);
  sup_bound_ = *std::max_element(values_.begin(), values_.end());
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
    lipschitz_ = std::max(lipschitz_, std::abs(slope(k)));
  }
  switch (kind_) {
    case PotentialKind::constant:
      label_ = "const:" + format_number(parameter_);
      break;
    case PotentialKind::vee:
      label_ = "vee:" + format_number(parameter_);
      break;
    case PotentialKind::piecewise_linear:
      label_ = "pl[" + std::to_string(breakpoints_.size()) + " points]";
      break;
  }
}

PotentialProfile PotentialProfile::constant(double c) {
  if (!std::isfinite(c) || c < 0.0) throw DomainError("constant potential must be finite and >= 0");
  return PotentialProfile(PotentialKind::constant, c, {0.0, 1.0}, {c, c});
}

PotentialProfile PotentialProfile::vee(double center) {
  if (!std::isfinite(center)) throw DomainError("vee center must be finite");
  std::vector<double> b{0.0};
  if (center > 0.0 && center < 1.0) b.push_back(center);
  b.push_back(1.0);
  std::vector<double> v;
  v.reserve(b.size());
  for (double r : b) v.push_back(std::abs(r - center));
  return PotentialProfile(PotentialKind::vee, center, std::move(b), std::move(v));
}

PotentialProfile PotentialProfile::piecewise_linear(std::vector<double> breakpoints,
                                                    std::vector<double> values) {
  return PotentialProfile(PotentialKind::piecewise_linear, 0.0, std::move(breakpoints),
                          std::move(values));
}

std::size_t PotentialProfile::segment_of(double r) const noexcept {
  // first breakpoint >= r, then step back to the segment on its left
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, r);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double PotentialProfile::slope(std::size_t k) const noexcept {
  return (values_[k + 1] - values_[k]) / (breakpoints_[k + 1] - breakpoints_[k]);
}

double PotentialProfile::operator()(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("potential evaluated outside [0,1] at r = " + format_number(r));
  }
  if (kind_ == PotentialKind::constant) return parameter_;
  if (kind_ == PotentialKind::vee) return std::abs(r - parameter_);
  const std::size_t k = segment_of(r);
  const double t = (r - breakpoints_[k]) / (breakpoints_[k + 1] - breakpoints_[k]);
  const double a = values_[k], b = values_[k + 1];
  // Clamp so rounding never leaves the segment's value range (keeps V <= sup_bound).
  return std::clamp(a + t * (b - a), std::min(a, b), std::max(a, b));
}

double eval_potential(const PotentialProfile& profile, double r) { return profile(r); }

ZeroSet zero_set(const PotentialProfile& profile, double tol) {
  if (!(tol > 0.0)) throw DomainError("zero_set tolerance must be positive");
  // V >= 0 and linear between breakpoints, so V vanishes inside a segment only
  // when it vanishes at both ends; everything else is an isolated breakpoint zero.
  const auto b = profile.breakpoints();
  const auto v = profile.values();
  ZeroSet zs;
  const std::size_t n = b.size();
  std::size_t i = 0;
  while (i < n) {
    if (v[i] > tol) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && v[j + 1] <= tol) ++j;
    if (j == i) {
      zs.points.push_back(b[i]);
    } else {
      zs.intervals.push_back({b[i], b[j]});
    }
    i = j + 1;
  }
  return zs;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view tok, std::size_t line) {
  double x = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  }
  return x;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PotentialProfile parse_potential(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool is_const = false;
  double const_value = 0.0;
  std::vector<double> rs;
  std::vector<double> vs;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = split_ws(line);
    if (!have_header) {
      have_header = true;
      if (tok[0] == "pl") {
        if (tok.size() != 1) throw ParseError(line_no, "'pl' header takes no arguments");
      } else if (tok[0] == "const") {
        if (tok.size() != 2) throw ParseError(line_no, "expected 'const <c>'");
        is_const = true;
        const_value = parse_number(tok[1], line_no);
        if (const_value < 0.0) throw ParseError(line_no, "negative potential value");
      } else {
        throw ParseError(line_no, "expected 'const <c>' or 'pl' header");
      }
      continue;
    }
    if (is_const) throw ParseError(line_no, "unexpected data after 'const' line");
    if (tok.size() != 2) throw ParseError(line_no, "expected '<r> <V(r)>'");
    const double r = parse_number(tok[0], line_no);
    const double v = parse_number(tok[1], line_no);
    if (v < 0.0) throw ParseError(line_no, "negative potential value");
    if (rs.empty() && r != 0.0) throw ParseError(line_no, "first breakpoint must be r = 0");
    if (!rs.empty() && !(r > rs.back())) {
      throw ParseError(line_no, "breakpoints must be strictly increasing");
    }
    if (r > 1.0) throw ParseError(line_no, "breakpoint beyond r = 1");
    rs.push_back(r);
    vs.push_back(v);
  }

  if (!have_header) throw ParseError(0, "empty potential file");
  if (is_const) {
    return PotentialProfile::constant(const_value);
  }
  if (rs.size() < 2) throw ParseError(line_no, "piecewise-linear potential needs at least two points");
  if (rs.back() != 1.0) throw ParseError(line_no, "last breakpoint must be r = 1");
  return PotentialProfile::piecewise_linear(std::move(rs), std::move(vs));
}

PotentialProfile parse_potential(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_potential(in);
}

PotentialProfile potential_from_spec(const std::string& spec) {
  auto builtin = [&](std::string_view prefix) -> std::optional<double> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string_view rest = std::string_view(spec).substr(prefix.size());
    try {
      return parse_number(rest, 0);
    } catch (const ParseError&) {
      throw ParseError(0, "bad builtin potential '" + spec + "'");
    }
  };
  if (auto c = builtin("const:")) return PotentialProfile::constant(*c);
  if (auto c = builtin("vee:")) return PotentialProfile::vee(*c);

  std::ifstream in(spec);
  if (!in) throw ParseError(0, "cannot open potential file '" + spec + "'");
  auto profile = parse_potential(in);
  if (profile.kind() == PotentialKind::piecewise_linear) profile.set_label("pl:" + spec);
  return profile;
}

}  // namespace eikvv
