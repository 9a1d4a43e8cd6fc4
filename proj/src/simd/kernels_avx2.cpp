#include "modcurve/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <complex>

namespace modcurve::simd {

namespace {

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

// 4-lane Neumaier accumulator; lanes are reduced in index order at the end.
struct VAccum {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  void add(__m256d x) {
    const __m256d t = _mm256_add_pd(sum, x);
    const __m256d mask = _mm256_cmp_pd(vabs(sum), vabs(x), _CMP_GE_OQ);
    const __m256d big = _mm256_blendv_pd(x, sum, mask);
    const __m256d small = _mm256_blendv_pd(sum, x, mask);
    comp = _mm256_add_pd(comp, _mm256_add_pd(_mm256_sub_pd(big, t), small));
    sum = t;
  }

  // Deterministic lane order, then the scalar tail contributions.
  double reduce(double tail_sum, double tail_comp) const {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, comp);
    double acc = 0, corr = 0;
    auto neumaier = [&](double x) {
      const double t = acc + x;
      if (std::abs(acc) >= std::abs(x))
        corr += (acc - t) + x;
      else
        corr += (x - t) + acc;
      acc = t;
    };
    for (int i = 0; i < 4; ++i) neumaier(s[i] + c[i]);
    neumaier(tail_sum + tail_comp);
    return acc + corr;
  }
};

struct VC {
  __m256d re, im;
};

inline VC vc_mul(VC a, VC b) {
  return {_mm256_sub_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)),
          _mm256_add_pd(_mm256_mul_pd(a.re, b.im), _mm256_mul_pd(a.im, b.re))};
}

inline VC vc_recip(VC a) {
  const __m256d den = _mm256_add_pd(_mm256_mul_pd(a.re, a.re), _mm256_mul_pd(a.im, a.im));
  return {_mm256_div_pd(a.re, den), _mm256_div_pd(_mm256_sub_pd(_mm256_setzero_pd(), a.im), den)};
}

inline VC vc_ipow(VC w, int k) {
  VC acc{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  VC base = w;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) acc = vc_mul(acc, base);
    base = vc_mul(base, base);
  }
  return acc;
}

// scalar fallbacks for the <4 remainder
using cplx = std::complex<double>;

struct SAccum {
  double sum = 0, comp = 0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
};

cplx s_ipow(cplx w, int k) {
  cplx acc(1, 0), base = w;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

Sum2 sum_inverse_powers_avx2(const double* re, const double* im, size_t n, int k) {
  VAccum are, aim;
  const size_t nv = n - n % 4;
  for (size_t i = 0; i < nv; i += 4) {
    VC lam{_mm256_loadu_pd(re + i), _mm256_loadu_pd(im + i)};
    VC v = vc_ipow(vc_recip(lam), k);
    are.add(v.re);
    aim.add(v.im);
  }
  SAccum tre, tim;
  for (size_t i = nv; i < n; ++i) {
    const cplx v = s_ipow(1.0 / cplx(re[i], im[i]), k);
    tre.add(v.real());
    tim.add(v.imag());
  }
  return {are.reduce(tre.sum, tre.comp), aim.reduce(tim.sum, tim.comp)};
}

WpSums wp_pair_sum_avx2(double zre, double zim, const double* re, const double* im, size_t n) {
  const VC z{_mm256_set1_pd(zre), _mm256_set1_pd(zim)};
  VAccum pre, pim, ppre, ppim;
  const size_t nv = n - n % 4;
  const __m256d two = _mm256_set1_pd(2.0);
  for (size_t i = 0; i < nv; i += 4) {
    VC lam{_mm256_loadu_pd(re + i), _mm256_loadu_pd(im + i)};
    VC d1{_mm256_sub_pd(z.re, lam.re), _mm256_sub_pd(z.im, lam.im)};
    VC d2{_mm256_add_pd(z.re, lam.re), _mm256_add_pd(z.im, lam.im)};
    VC i1 = vc_recip(d1), i2 = vc_recip(d2), il = vc_recip(lam);
    VC i1s = vc_mul(i1, i1), i2s = vc_mul(i2, i2), ils = vc_mul(il, il);
    VC p{_mm256_sub_pd(_mm256_add_pd(i1s.re, i2s.re), _mm256_mul_pd(two, ils.re)),
         _mm256_sub_pd(_mm256_add_pd(i1s.im, i2s.im), _mm256_mul_pd(two, ils.im))};
    const VC c1 = vc_mul(i1s, i1), c2 = vc_mul(i2s, i2);
    pre.add(p.re);
    pim.add(p.im);
    ppre.add(_mm256_mul_pd(_mm256_set1_pd(-2.0), _mm256_add_pd(c1.re, c2.re)));
    ppim.add(_mm256_mul_pd(_mm256_set1_pd(-2.0), _mm256_add_pd(c1.im, c2.im)));
  }
  SAccum spre, spim, sppre, sppim;
  const cplx zs(zre, zim);
  for (size_t i = nv; i < n; ++i) {
    const cplx lam(re[i], im[i]);
    const cplx i1 = 1.0 / (zs - lam), i2 = 1.0 / (zs + lam), il = 1.0 / lam;
    const cplx i1s = i1 * i1, i2s = i2 * i2;
    const cplx p = i1s + i2s - 2.0 * il * il;
    const cplx pp = -2.0 * (i1s * i1 + i2s * i2);
    spre.add(p.real());
    spim.add(p.imag());
    sppre.add(pp.real());
    sppim.add(pp.imag());
  }
  return {pre.reduce(spre.sum, spre.comp), pim.reduce(spim.sum, spim.comp),
          ppre.reduce(sppre.sum, sppre.comp), ppim.reduce(sppim.sum, sppim.comp)};
}

PowerTails sum_inv4_inv6_avx2(const double* re, const double* im, size_t n) {
  VAccum a4re, a4im, a6re, a6im;
  const size_t nv = n - n % 4;
  for (size_t i = 0; i < nv; i += 4) {
    VC lam{_mm256_loadu_pd(re + i), _mm256_loadu_pd(im + i)};
    VC il = vc_recip(lam);
    VC w2 = vc_mul(il, il);
    VC w4 = vc_mul(w2, w2);
    VC w6 = vc_mul(w4, w2);
    a4re.add(w4.re);
    a4im.add(w4.im);
    a6re.add(w6.re);
    a6im.add(w6.im);
  }
  SAccum s4re, s4im, s6re, s6im;
  for (size_t i = nv; i < n; ++i) {
    const cplx w2 = 1.0 / (cplx(re[i], im[i]) * cplx(re[i], im[i]));
    const cplx w4 = w2 * w2, w6 = w4 * w2;
    s4re.add(w4.real());
    s4im.add(w4.imag());
    s6re.add(w6.real());
    s6im.add(w6.imag());
  }
  return {a4re.reduce(s4re.sum, s4re.comp), a4im.reduce(s4im.sum, s4im.comp),
          a6re.reduce(s6re.sum, s6re.comp), a6im.reduce(s6im.sum, s6im.comp)};
}

void eval_poly_many_avx2(const double* coef, size_t ncoef, const double* qre, const double* qim,
                         size_t npts, double* out_re, double* out_im) {
  const size_t nv = npts - npts % 4;
  for (size_t p = 0; p < nv; p += 4) {
    VC q{_mm256_loadu_pd(qre + p), _mm256_loadu_pd(qim + p)};
    VC acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (size_t j = ncoef; j-- > 0;) {
      acc = vc_mul(acc, q);
      acc.re = _mm256_add_pd(acc.re, _mm256_set1_pd(coef[j]));
    }
    _mm256_storeu_pd(out_re + p, acc.re);
    _mm256_storeu_pd(out_im + p, acc.im);
  }
  for (size_t p = nv; p < npts; ++p) {
    cplx acc(0, 0);
    const cplx q(qre[p], qim[p]);
    for (size_t j = ncoef; j-- > 0;) acc = acc * q + coef[j];
    out_re[p] = acc.real();
    out_im[p] = acc.imag();
  }
}

} // namespace

const Kernels* avx2_kernels() {
  static const Kernels table{"avx2", &sum_inverse_powers_avx2, &wp_pair_sum_avx2,
                             &sum_inv4_inv6_avx2, &eval_poly_many_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

} // namespace modcurve::simd

#else // non-x86 targets fall back to the scalar build
// TODO: NEON variant for aarch64; the scalar reference covers it until then.

namespace modcurve::simd {
const Kernels* avx2_kernels() { return nullptr; }
} // namespace modcurve::simd

#endif
