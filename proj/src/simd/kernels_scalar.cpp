#include "modcurve/simd/kernels.hpp"

#include <cmath>
#include <complex>

namespace modcurve::simd {

namespace {

using cplx = std::complex<double>;

// Neumaier-compensated accumulator.
struct Accum {
  double sum = 0, comp = 0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct CAccum {
  Accum re, im;
  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
};

cplx ipow(cplx w, int k) {
  // k >= 1; exponentiation by squaring
  cplx acc(1, 0);
  cplx base = w;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

Sum2 sum_inverse_powers_scalar(const double* re, const double* im, size_t n, int k) {
  CAccum acc;
  for (size_t i = 0; i < n; ++i) {
    const cplx lam(re[i], im[i]);
    acc.add(ipow(1.0 / lam, k));
  }
  return {acc.re.value(), acc.im.value()};
}

WpSums wp_pair_sum_scalar(double zre, double zim, const double* re, const double* im, size_t n) {
  const cplx z(zre, zim);
  CAccum p, pp;
  for (size_t i = 0; i < n; ++i) {
    const cplx lam(re[i], im[i]);
    const cplx d1 = z - lam, d2 = z + lam;
    const cplx i1 = 1.0 / d1, i2 = 1.0 / d2, il = 1.0 / lam;
    const cplx i1s = i1 * i1, i2s = i2 * i2;
    p.add(i1s + i2s - 2.0 * il * il);
    pp.add(-2.0 * (i1s * i1 + i2s * i2));
  }
  return {p.re.value(), p.im.value(), pp.re.value(), pp.im.value()};
}

PowerTails sum_inv4_inv6_scalar(const double* re, const double* im, size_t n) {
  CAccum t4, t6;
  for (size_t i = 0; i < n; ++i) {
    const cplx lam(re[i], im[i]);
    const cplx w2 = 1.0 / (lam * lam);
    const cplx w4 = w2 * w2;
    t4.add(w4);
    t6.add(w4 * w2);
  }
  return {t4.re.value(), t4.im.value(), t6.re.value(), t6.im.value()};
}

void eval_poly_many_scalar(const double* coef, size_t ncoef, const double* qre, const double* qim,
                           size_t npts, double* out_re, double* out_im) {
  for (size_t p = 0; p < npts; ++p) {
    const cplx q(qre[p], qim[p]);
    cplx acc(0, 0);
    for (size_t j = ncoef; j-- > 0;) acc = acc * q + coef[j];
    out_re[p] = acc.real();
    out_im[p] = acc.imag();
  }
}

} // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", &sum_inverse_powers_scalar, &wp_pair_sum_scalar,
                         &sum_inv4_inv6_scalar, &eval_poly_many_scalar};
  return k;
}

} // namespace modcurve::simd
