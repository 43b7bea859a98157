#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference and, on x86-64,
// an AVX2+FMA variant chosen at runtime. The variants agree to a few ulp and
// are equivalence-tested against each other.

#include <span>
#include <string_view>

namespace eikvv::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant, unless EIKONAL_VV_SIMD=scalar forces the reference path.
Isa active_isa() noexcept;

/// Parameters of the integrand exp(exp_scale*x + exp_shift) * (base_scale*x + base_shift)^power.
struct ExpPolyParams {
  double exp_scale = 1.0;
  double exp_shift = 0.0;
  double base_scale = 0.0;
  double base_shift = 1.0;
  int power = 0;
};

/// sum_i w[i] * exp(es*x[i] + eo) * (bs*x[i] + bo)^power * v[i].
/// All spans have the same length.
double exp_poly_sum(Isa isa, std::span<const double> x, std::span<const double> w,
                    std::span<const double> v, const ExpPolyParams& params);
double exp_poly_sum(std::span<const double> x, std::span<const double> w,
                    std::span<const double> v, const ExpPolyParams& params);

/// out[i] = c0[i] + c1[i]*x[i] + c2[i]*x[i]^2.
void eval_quadratic(Isa isa, std::span<const double> x, std::span<const double> c0,
                    std::span<const double> c1, std::span<const double> c2, std::span<double> out);
void eval_quadratic(std::span<const double> x, std::span<const double> c0,
                    std::span<const double> c1, std::span<const double> c2, std::span<double> out);

/// out[i] = exp(in[i]); exposed for accuracy tests of the vector exponential.
void exp_batch(Isa isa, std::span<const double> in, std::span<double> out);

}  // namespace eikvv::kernels
