#pragma once

#include <cstddef>

#include "eikvv/kernels.hpp"

namespace eikvv::kernels::detail {

double exp_poly_sum_scalar(const double* x, const double* w, const double* v, std::size_t n,
                           const ExpPolyParams& p);
void eval_quadratic_scalar(const double* x, const double* c0, const double* c1, const double* c2,
                           double* out, std::size_t n);
void exp_batch_scalar(const double* in, double* out, std::size_t n);

#if defined(EIKVV_HAS_AVX2)
double exp_poly_sum_avx2(const double* x, const double* w, const double* v, std::size_t n,
                         const ExpPolyParams& p);
void eval_quadratic_avx2(const double* x, const double* c0, const double* c1, const double* c2,
                         double* out, std::size_t n);
void exp_batch_avx2(const double* in, double* out, std::size_t n);
#endif

}  // namespace eikvv::kernels::detail
