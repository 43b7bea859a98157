#pragma once

#include <array>
#include <cstddef>

namespace eikvv {

/// Gauss-Legendre rule on [-1,1]. Nodes ascending.
template <std::size_t N>
struct GaussLegendreRule {
  std::array<double, N> nodes;
  std::array<double, N> weights;
};

inline constexpr std::size_t kPanelOrder = 8;

/// Order-8 rule used by every quadrature panel; computed once by Newton
/// iteration on P_8 and cached.
const GaussLegendreRule<kPanelOrder>& gauss_legendre8();

/// Composite Gauss-Legendre of order 8 on [a,b] with `panels` equal panels.
template <class F>
double integrate_gl8(F&& f, double a, double b, std::size_t panels = 1) {
  const auto& rule = gauss_legendre8();
  const double width = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * width;
    const double half = 0.5 * width;
    double s = 0.0;
    for (std::size_t j = 0; j < kPanelOrder; ++j) s += rule.weights[j] * f(mid + half * rule.nodes[j]);
    sum += half * s;
  }
  return sum;
}

}  // namespace eikvv
