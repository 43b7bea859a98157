#include "eikvv/reference_problems.hpp"

namespace eikvv::reference {

PiecewisePoly unit_rhs() { return PiecewisePoly::constant(-1.0, 1.0, 1.0); }

PiecewisePoly unit_rhs_solution() {
  return PiecewisePoly({-1.0, 0.0, 1.0}, {{1.0, 1.0, 0.0}, {1.0, -1.0, 0.0}});
}

PiecewisePoly two_well_rhs() {
  return PiecewisePoly({-1.0, -0.5, 0.0, 0.5, 1.0},
                       {{-0.5, -1.0, 0.0}, {0.5, 1.0, 0.0}, {0.5, -1.0, 0.0}, {-0.5, 1.0, 0.0}});
}

// 1/2 (x + a)^2 + b = (a^2/2 + b) + a x + x^2/2
PiecewisePoly two_well_low_solution() {
  return PiecewisePoly({-1.0, 0.0, 1.0}, {{0.0, 0.5, 0.5}, {0.0, -0.5, 0.5}});
}

PiecewisePoly two_well_high_solution() {
  return PiecewisePoly({-1.0, -0.5, 0.0, 0.5, 1.0}, {{0.0, -0.5, -0.5},
                                                     {0.25, 0.5, 0.5},
                                                     {0.25, -0.5, 0.5},
                                                     {0.0, 0.5, -0.5}});
}

}  // namespace eikvv::reference
