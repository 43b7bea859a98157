#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace eikvv::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(EIKVV_HAS_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* forced = std::getenv("EIKONAL_VV_SIMD")) {
    if (std::string(forced) == "scalar") return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel input spans differ in length");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  static const bool avx2 = cpu_has_avx2();
  return isa == Isa::scalar || (isa == Isa::avx2 && avx2);
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

double exp_poly_sum(Isa isa, std::span<const double> x, std::span<const double> w,
                    std::span<const double> v, const ExpPolyParams& params) {
  require_same_size(x.size(), w.size());
  require_same_size(x.size(), v.size());
#if defined(EIKVV_HAS_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    return detail::exp_poly_sum_avx2(x.data(), w.data(), v.data(), x.size(), params);
  }
#endif
  (void)isa;
  return detail::exp_poly_sum_scalar(x.data(), w.data(), v.data(), x.size(), params);
}

double exp_poly_sum(std::span<const double> x, std::span<const double> w,
                    std::span<const double> v, const ExpPolyParams& params) {
  return exp_poly_sum(active_isa(), x, w, v, params);
}

void eval_quadratic(Isa isa, std::span<const double> x, std::span<const double> c0,
                    std::span<const double> c1, std::span<const double> c2, std::span<double> out) {
  require_same_size(x.size(), c0.size());
  require_same_size(x.size(), c1.size());
  require_same_size(x.size(), c2.size());
  require_same_size(x.size(), out.size());
#if defined(EIKVV_HAS_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    detail::eval_quadratic_avx2(x.data(), c0.data(), c1.data(), c2.data(), out.data(), x.size());
    return;
  }
#endif
  (void)isa;
  detail::eval_quadratic_scalar(x.data(), c0.data(), c1.data(), c2.data(), out.data(), x.size());
}

void eval_quadratic(std::span<const double> x, std::span<const double> c0,
                    std::span<const double> c1, std::span<const double> c2, std::span<double> out) {
  eval_quadratic(active_isa(), x, c0, c1, c2, out);
}

void exp_batch(Isa isa, std::span<const double> in, std::span<double> out) {
  require_same_size(in.size(), out.size());
#if defined(EIKVV_HAS_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    detail::exp_batch_avx2(in.data(), out.data(), in.size());
    return;
  }
#endif
  (void)isa;
  detail::exp_batch_scalar(in.data(), out.data(), in.size());
}

}  // namespace eikvv::kernels
