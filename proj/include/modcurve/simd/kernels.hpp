#pragma once

// Data-parallel inner loops of the analytic evaluators, in two equivalent
// builds: a scalar reference and an AVX2 variant selected at runtime. All
// kernels accumulate with Neumaier compensation and reduce lanes in a fixed
// order, so each build is deterministic; the two builds are equivalence-
// tested against each other.

#include <cstddef>

namespace modcurve::simd {

struct Sum2 {
  double re = 0, im = 0;
};

// Partial sums of the Weierstrass series over +-pairs: p accumulates
// 1/(z-l)^2 + 1/(z+l)^2 - 2/l^2 and pp accumulates -2/(z-l)^3 - 2/(z+l)^3.
struct WpSums {
  double p_re = 0, p_im = 0;
  double pp_re = 0, pp_im = 0;
};

// Sum of l^-4 and l^-6 over a point list, used for truncation-tail control.
struct PowerTails {
  double t4_re = 0, t4_im = 0;
  double t6_re = 0, t6_im = 0;
};

struct Kernels {
  const char* name;
  // sum over points l of l^-k (k >= 2 even)
  Sum2 (*sum_inverse_powers)(const double* re, const double* im, size_t n, int k);
  WpSums (*wp_pair_sum)(double zre, double zim, const double* re, const double* im, size_t n);
  PowerTails (*sum_inv4_inv6)(const double* re, const double* im, size_t n);
  // real-coefficient polynomial evaluated at many complex points
  void (*eval_poly_many)(const double* coef, size_t ncoef, const double* qre, const double* qim,
                         size_t npts, double* out_re, double* out_im);
};

const Kernels& scalar_kernels();
// nullptr when AVX2 is unsupported by the build target or the running CPU.
const Kernels* avx2_kernels();
// Runtime selection; the MODCURVE_SIMD environment variable ("scalar" or
// "avx2") forces a particular build.
const Kernels& active_kernels();

} // namespace modcurve::simd
