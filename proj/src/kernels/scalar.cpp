#include <cmath>

#include "kernels_internal.hpp"

namespace eikvv::kernels::detail {

double exp_poly_sum_scalar(const double* x, const double* w, const double* v, std::size_t n,
                           const ExpPolyParams& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double base = p.base_scale * x[i] + p.base_shift;
    double pw = 1.0;
    for (int k = 0; k < p.power; ++k) pw *= base;
    sum += w[i] * std::exp(p.exp_scale * x[i] + p.exp_shift) * pw * v[i];
  }
  return sum;
}

void eval_quadratic_scalar(const double* x, const double* c0, const double* c1, const double* c2,
                           double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c0[i] + x[i] * (c1[i] + x[i] * c2[i]);
}

void exp_batch_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(in[i]);
}

}  // namespace eikvv::kernels::detail
