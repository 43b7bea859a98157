#include "eikvv/gauss_legendre.hpp"

#include <cmath>
#include <numbers>

namespace eikvv {

namespace {

template <std::size_t N>
GaussLegendreRule<N> build_rule() {
  GaussLegendreRule<N> rule{};
  constexpr std::size_t half = (N + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(N) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= N; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-17) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[N - 1 - i] = x;
    rule.weights[N - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule<kPanelOrder>& gauss_legendre8() {
  static const GaussLegendreRule<kPanelOrder> rule = build_rule<kPanelOrder>();
  return rule;
}

}  // namespace eikvv
