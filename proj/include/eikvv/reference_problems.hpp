#pragma once

// Closed-form candidates for |u'| = f on (-1,1) with u(-1) = u(1) = 0.

#include "eikvv/piecewise_poly.hpp"

namespace eikvv::reference {

/// f = 1: the unique viscosity solution 1 - |x|.
PiecewisePoly unit_rhs();
PiecewisePoly unit_rhs_solution();

/// f(x) = | |x| - 1/2 |, vanishing at +-1/2.
PiecewisePoly two_well_rhs();
/// 1/2 (x -+ 1/2)^2 - 1/8: the lower of the two solutions, u(+-1/2) = -1/8.
PiecewisePoly two_well_low_solution();
/// The maximal solution, u(+-1/2) = 1/8, u(0) = 1/4.
PiecewisePoly two_well_high_solution();

}  // namespace eikvv::reference
