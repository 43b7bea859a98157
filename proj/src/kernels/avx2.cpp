// Compiled with -mavx2 -mfma; only called after a runtime cpuid check.

#include <immintrin.h>

#include <cstdint>

#include "kernels_internal.hpp"

namespace eikvv::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

// Cody-Waite reduction x = n ln2 + r, |r| <= ln2/2, then the (3,3) Pade form
// exp(r) = 1 + 2 r P(r^2) / (Q(r^2) - r P(r^2)); coefficients from Cephes.
inline __m256d exp_pd(__m256d x) {
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d underflow = _mm256_cmp_pd(x, _mm256_set1_pd(-745.2), _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93145751953125e-1), x);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.42860682030941723212e-6), r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d px = _mm256_fmadd_pd(_mm256_set1_pd(1.26177193074810590878e-4), rr,
                               _mm256_set1_pd(3.02994407707441961300e-2));
  px = _mm256_fmadd_pd(px, rr, _mm256_set1_pd(9.99999999999999999910e-1));
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_fmadd_pd(_mm256_set1_pd(3.00198505138664455042e-6), rr,
                               _mm256_set1_pd(2.52448340349684104192e-3));
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(2.27265548208155028766e-1));
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(2.00000000000000000009e0));
  __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

  // 2^n: round-trip n through the 2^52 + 2^51 magic constant to get an int64
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);
  const __m256i ni = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(n, magic)),
                                      _mm256_castpd_si256(magic));
  // the clamp keeps n in [-1021, 1023], so 2^n is a normal double
  const __m256d scale = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_add_epi64(ni, _mm256_set1_epi64x(1023)), 52));
  e = _mm256_mul_pd(e, scale);
  return _mm256_andnot_pd(underflow, e);
}

inline __m256d ipow_pd(__m256d base, int power) {
  __m256d pw = _mm256_set1_pd(1.0);
  for (int k = 0; k < power; ++k) pw = _mm256_mul_pd(pw, base);
  return pw;
}

}  // namespace

double exp_poly_sum_avx2(const double* x, const double* w, const double* v, std::size_t n,
                         const ExpPolyParams& p) {
  const __m256d es = _mm256_set1_pd(p.exp_scale);
  const __m256d eo = _mm256_set1_pd(p.exp_shift);
  const __m256d bs = _mm256_set1_pd(p.base_scale);
  const __m256d bo = _mm256_set1_pd(p.base_shift);
  __m256d acc = _mm256_setzero_pd();

  auto accumulate = [&](__m256d xv, __m256d wv, __m256d vv) {
    const __m256d e = exp_pd(_mm256_fmadd_pd(es, xv, eo));
    const __m256d pw = ipow_pd(_mm256_fmadd_pd(bs, xv, bo), p.power);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_mul_pd(wv, e), pw), vv, acc);
  };

  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    accumulate(_mm256_loadu_pd(x + i), _mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i));
  }
  if (i < n) {
    alignas(32) double xt[kLanes] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double wt[kLanes] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double vt[kLanes] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; i + k < n; ++k) {
      xt[k] = x[i + k];
      wt[k] = w[i + k];
      vt[k] = v[i + k];
    }
    accumulate(_mm256_load_pd(xt), _mm256_load_pd(wt), _mm256_load_pd(vt));
  }

  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void eval_quadratic_avx2(const double* x, const double* c0, const double* c1, const double* c2,
                         double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    __m256d r = _mm256_fmadd_pd(xv, _mm256_loadu_pd(c2 + i), _mm256_loadu_pd(c1 + i));
    r = _mm256_fmadd_pd(xv, r, _mm256_loadu_pd(c0 + i));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = c0[i] + x[i] * (c1[i] + x[i] * c2[i]);
}

void exp_batch_avx2(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(out + i, exp_pd(_mm256_loadu_pd(in + i)));
  if (i < n) {
    alignas(32) double t[kLanes] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; i + k < n; ++k) t[k] = in[i + k];
    alignas(32) double r[kLanes];
    _mm256_store_pd(r, exp_pd(_mm256_load_pd(t)));
    for (std::size_t k = 0; i + k < n; ++k) out[i + k] = r[k];
  }
}

}  // namespace eikvv::kernels::detail
