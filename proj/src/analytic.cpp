#include "modcurve/analytic.hpp"

#include "modcurve/qseries.hpp"
#include "modcurve/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace modcurve::analytic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kSeriesTerms = 40;     // |q| <= exp(-pi sqrt 3) makes 40 terms ample
constexpr int kWpLaurentTerms = 40;  // z^(2m) terms of the pe expansion
constexpr double kWpSeriesRadius = 0.45; // series branch inside 0.45 * shortest vector
constexpr int kWpLatticeRadius = 300;    // main disk of the defining sum
constexpr int kWpTailRadius = 1200;      // annulus controlling the truncation tails

using sl2z::TauPoint;

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

// q-expansion coefficients of E_w as doubles for every weight the pe-series
// needs, built once (thread-safe static initialization).
const std::vector<double>& eis_coeffs(int weight) {
  static const std::vector<std::vector<double>> cache = [] {
    std::vector<std::vector<double>> all(2 * kWpLaurentTerms + 3);
    for (int w = 4; w < (int)all.size(); w += 2) {
      const auto exact = qseries::eisenstein_normalized(w, kSeriesTerms);
      std::vector<double> c;
      c.reserve(kSeriesTerms);
      for (long e = 0; e < kSeriesTerms; ++e) c.push_back(exact.coeff(e).get_d());
      all[(size_t)w] = std::move(c);
    }
    return all;
  }();
  return cache.at((size_t)weight);
}

Complex eval_poly(const std::vector<double>& coef, Complex q) {
  Complex acc(0, 0);
  for (size_t j = coef.size(); j-- > 0;) acc = acc * q + coef[j];
  return acc;
}

// Enumerates lattice points m*l1 + n*l2 with rho_lo < |lambda| <= rho_hi,
// one representative per +-pair, packed into chunks for the kernels.
template <typename ChunkFn>
void for_half_annulus(Complex l1, Complex l2, double rho_lo, double rho_hi, ChunkFn&& chunk) {
  constexpr size_t kChunk = 8192;
  std::vector<double> re, im;
  re.reserve(kChunk);
  im.reserve(kChunk);

  const double a1 = std::abs(l1);
  const Complex ratio = l2 / l1;
  const double h = std::abs(std::imag(ratio)) * a1; // line spacing along n
  const long n_max = (long)std::floor(rho_hi / h);

  auto flush = [&]() {
    if (!re.empty()) chunk(re.data(), im.data(), re.size());
    re.clear();
    im.clear();
  };
  auto push_range = [&](long n, long m_lo, long m_hi) {
    for (long m = m_lo; m <= m_hi; ++m) {
      if (n == 0 && m <= 0) continue;
      const Complex lam = (double)m * l1 + (double)n * l2;
      const double r = std::abs(lam);
      if (r <= rho_lo || r > rho_hi) continue;
      re.push_back(lam.real());
      im.push_back(lam.imag());
      if (re.size() >= kChunk) flush();
    }
  };

  for (long n = 0; n <= n_max; ++n) {
    const double im_w = (double)n * std::imag(ratio);
    const double center = -(double)n * std::real(ratio);
    const double hi2 = rho_hi / a1, lo2 = rho_lo / a1;
    const double outer = hi2 * hi2 - im_w * im_w;
    if (outer < 0) continue;
    const double w_hi = std::sqrt(outer);
    // Generous integer bounds; the per-point radius filter makes the call.
    const long lo_all = (long)std::ceil(center - w_hi - 1e-12);
    const long hi_all = (long)std::floor(center + w_hi + 1e-12);
    const double inner = lo2 * lo2 - im_w * im_w;
    if (inner > 0) {
      // Skip the run of points strictly inside the inner radius.
      const double w_lo = std::sqrt(inner);
      const long gap_lo = (long)std::floor(center - w_lo + 1e-12);
      const long gap_hi = (long)std::ceil(center + w_lo - 1e-12);
      push_range(n, lo_all, gap_lo);
      push_range(n, std::max(gap_hi, gap_lo + 1), hi_all);
    } else {
      push_range(n, lo_all, hi_all);
    }
  }
  flush();
}

struct ReducedLattice {
  Complex u, v;    // gauss-reduced basis, v/u in F
  Complex tau_red; // v/u
  double shortest;
};

ReducedLattice reduce_basis(const lattice::FramedLattice& L) {
  const auto g = lattice::gauss_reduce(L);
  return {g.basis.lambda1, g.basis.lambda2, g.tau.value, std::abs(g.basis.lambda1)};
}

} // namespace

double zeta_even(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("zeta_even: k must be even and >= 2");
  // zeta(2m) = (2 pi)^{2m} |B_{2m}| / (2 (2m)!)
  Rational b = qseries::bernoulli(k);
  Rational fact(1);
  for (int j = 2; j <= k; ++j) fact *= j;
  Rational ratio = abs(b) / (2 * fact);
  return std::pow(2 * kPi, k) * ratio.get_d();
}

Complex eisenstein_lattice_sum(int k, const lattice::FramedLattice& L, int radius) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument(
        "eisenstein_lattice_sum: series requires even k >= 4 (odd sums vanish, k=2 is conditional)");
  if (radius < 1) throw std::invalid_argument("eisenstein_lattice_sum: radius must be >= 1");

  const ReducedLattice red = reduce_basis(L);
  const double rho = (double)radius * red.shortest;
  const auto& kern = simd::active_kernels();

  Accum sre, sim;
  for_half_annulus(red.u, red.v, 0.0, rho, [&](const double* re, const double* im, size_t n) {
    const simd::Sum2 s = kern.sum_inverse_powers(re, im, n, k);
    sre.add(s.re);
    sim.add(s.im);
  });
  // (-lambda)^-k = lambda^-k for even k
  return 2.0 * Complex(sre.value(), sim.value());
}

Complex eisenstein_lattice_sum(int k, const TauPoint& tau, int radius) {
  return eisenstein_lattice_sum(k, lattice::FramedLattice(Complex(1, 0), tau.value), radius);
}

ModularValues eval_modular(const TauPoint& tau) {
  const auto red = sl2z::reduce_to_fundamental_domain(tau);
  const Complex ts = red.tau.value;
  const Complex q = std::exp(Complex(0, 2 * kPi) * ts);

  const Complex e4_star = eval_poly(eis_coeffs(4), q);
  const Complex e6_star = eval_poly(eis_coeffs(6), q);

  // E_w(tau) = (c tau + d)^-w E_w(gamma tau)
  const Complex cd = red.gamma.c.get_d() * tau.value + red.gamma.d.get_d();
  const Complex cd2 = cd * cd;
  const Complex cd4 = cd2 * cd2;

  ModularValues out;
  out.E4 = e4_star / cd4;
  out.E6 = e6_star / (cd4 * cd2);
  const double pi4 = std::pow(kPi, 4), pi6 = std::pow(kPi, 6);
  out.g2 = (4.0 * pi4 / 3.0) * out.E4;
  out.g3 = (8.0 * pi6 / 27.0) * out.E6;
  out.delta = out.g2 * out.g2 * out.g2 - 27.0 * out.g3 * out.g3;
  // j = 1728 E4^3/(E4^3 - E6^2), computed at the reduced point where it is
  // numerically clean, and invariant under the transformation back.
  const Complex e43 = e4_star * e4_star * e4_star;
  out.j = 1728.0 * e43 / (e43 - e6_star * e6_star);
  return out;
}

namespace {

// G_w(tau) = 2 zeta(w) E_w(tau) for the reduced tau.
Complex big_G(int weight, Complex q) {
  return 2.0 * zeta_even(weight) * eval_poly(eis_coeffs(weight), q);
}

// Nearest-point reduction of z modulo the (reduced) lattice.
Complex reduce_z(const ReducedLattice& red, Complex z) {
  const double det = red.u.real() * red.v.imag() - red.v.real() * red.u.imag();
  const double x = (z.real() * red.v.imag() - red.v.real() * z.imag()) / det;
  const double y = (red.u.real() * z.imag() - z.real() * red.u.imag()) / det;
  Complex zr = z - std::round(x) * red.u - std::round(y) * red.v;
  for (int di = -1; di <= 1; ++di)
    for (int dj = -1; dj <= 1; ++dj) {
      const Complex cand = zr - (double)di * red.u - (double)dj * red.v;
      if (std::abs(cand) < std::abs(zr)) zr = cand;
    }
  return zr;
}

WpValue wp_series_reduced(const ReducedLattice& red, Complex zr) {
  // Laurent expansion: scale to the (1, tau) lattice, where the cached
  // q-series of the G's apply, then scale back.
  const Complex zeta_arg = zr / red.u;
  const Complex q = std::exp(Complex(0, 2 * kPi) * red.tau_red);
  const Complex z2 = zeta_arg * zeta_arg;
  Complex p = 1.0 / z2;
  Complex pp = -2.0 / (z2 * zeta_arg);
  Complex zpow = Complex(1, 0); // zeta_arg^(2m)
  for (int m = 1; m <= kWpLaurentTerms; ++m) {
    const Complex g = big_G(2 * m + 2, q);
    zpow *= z2;
    p += (double)(2 * m + 1) * g * zpow;                       // (2m+1) G z^{2m}
    pp += (double)(2 * m) * (2 * m + 1) * g * zpow / zeta_arg; // 2m(2m+1) G z^{2m-1}
  }
  const Complex u2 = red.u * red.u;
  return {p / u2, pp / (u2 * red.u)};
}

WpValue wp_lattice_reduced(const ReducedLattice& red, Complex zr) {
  // Defining sum over +-pairs in a disk, plus the analytically controlled
  // truncation tails 3z^2 T4 + 5z^4 T6 (resp. 6z T4 + 20z^3 T6 for pe'),
  // where T_k sums lambda^-k over the complementary annulus.
  const double s = red.shortest;
  const auto& kern = simd::active_kernels();
  Accum pre, pim, ppre, ppim;
  for_half_annulus(red.u, red.v, 0.0, kWpLatticeRadius * s,
                   [&](const double* re, const double* im, size_t n) {
                     const simd::WpSums w = kern.wp_pair_sum(zr.real(), zr.imag(), re, im, n);
                     pre.add(w.p_re);
                     pim.add(w.p_im);
                     ppre.add(w.pp_re);
                     ppim.add(w.pp_im);
                   });
  Accum t4re, t4im, t6re, t6im;
  for_half_annulus(red.u, red.v, kWpLatticeRadius * s, kWpTailRadius * s,
                   [&](const double* re, const double* im, size_t n) {
                     const simd::PowerTails t = kern.sum_inv4_inv6(re, im, n);
                     t4re.add(t.t4_re);
                     t4im.add(t.t4_im);
                     t6re.add(t.t6_re);
                     t6im.add(t.t6_im);
                   });
  const Complex T4 = 2.0 * Complex(t4re.value(), t4im.value());
  const Complex T6 = 2.0 * Complex(t6re.value(), t6im.value());
  const Complex z2 = zr * zr;
  Complex p = 1.0 / z2 + Complex(pre.value(), pim.value());
  Complex pp = -2.0 / (z2 * zr) + Complex(ppre.value(), ppim.value());
  p += 3.0 * z2 * T4 + 5.0 * z2 * z2 * T6;
  pp += 6.0 * zr * T4 + 20.0 * z2 * zr * T6;
  return {p, pp};
}

Complex checked_reduce_z(const ReducedLattice& red, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("wp: z must be finite");
  const Complex zr = reduce_z(red, z);
  if (std::abs(zr) <= 1e-9 * red.shortest)
    throw std::domain_error("wp: z lies on the lattice (pole)");
  return zr;
}

} // namespace

WpValue wp_via_series(const lattice::FramedLattice& L, Complex z) {
  const ReducedLattice red = reduce_basis(L);
  return wp_series_reduced(red, checked_reduce_z(red, z));
}

WpValue wp_via_lattice_sum(const lattice::FramedLattice& L, Complex z) {
  const ReducedLattice red = reduce_basis(L);
  return wp_lattice_reduced(red, checked_reduce_z(red, z));
}

WpValue wp(const lattice::FramedLattice& L, Complex z) {
  const ReducedLattice red = reduce_basis(L);
  const Complex zr = checked_reduce_z(red, z);
  if (std::abs(zr) < kWpSeriesRadius * red.shortest) return wp_series_reduced(red, zr);
  return wp_lattice_reduced(red, zr);
}

WpValue wp(const TauPoint& tau, Complex z) {
  return wp(lattice::FramedLattice(Complex(1, 0), tau.value), z);
}

ProjectivePoint embed(const TauPoint& tau, Complex z) {
  // z on the lattice is the point at infinity of the cubic
  const Complex tv = tau.value;
  const double yy = z.imag() / tv.imag();
  const double xx = z.real() - yy * tv.real();
  const Complex zr = z - std::round(xx) - std::round(yy) * tv;
  if (std::abs(zr) <= 1e-9) return {Complex(0, 0), Complex(1, 0), Complex(0, 0)};
  const WpValue w = wp(tau, z);
  return {w.p, w.p_prime, Complex(1, 0)};
}

TauPoint invert_j(Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw std::invalid_argument("invert_j: value must be finite");
  const Complex rho(-0.5, std::sqrt(3.0) / 2.0);
  if (std::abs(c - 1728.0) <= 1e-9 * (1 + std::abs(c))) return TauPoint(Complex(0, 1));
  if (std::abs(c) <= 1e-9) return TauPoint(rho);

  const double tol = 1e-9 * (1 + std::abs(c));

  auto j_and_derivative = [&](Complex t, Complex& jv, Complex& jd) {
    const auto red = sl2z::reduce_to_fundamental_domain(TauPoint(t));
    const Complex q = std::exp(Complex(0, 2 * kPi) * red.tau.value);
    const Complex e4 = eval_poly(eis_coeffs(4), q);
    const Complex e6 = eval_poly(eis_coeffs(6), q);
    const Complex e43 = e4 * e4 * e4;
    const Complex dn = (e43 - e6 * e6) / 1728.0;
    jv = e43 / dn;
    // dj/dtau = -2 pi i E4^2 E6 / Delta_norm, times the automorphy factor
    // (c tau + d)^-2 from the chain rule through the reduction.
    const Complex cd = red.gamma.c.get_d() * t + red.gamma.d.get_d();
    jd = Complex(0, -2 * kPi) * e4 * e4 * e6 / dn / (cd * cd);
  };

  // Seeds: the cusp expansion for large |c|, else a grid over F.
  std::vector<Complex> seeds;
  if (std::abs(c - 744.0) > 2500.0) {
    const Complex q0 = 1.0 / (c - 744.0);
    seeds.push_back(std::log(q0) / Complex(0, 2 * kPi));
  }
  std::vector<std::pair<double, Complex>> graded;
  for (int gx = 0; gx < 40; ++gx)
    for (int gy = 0; gy < 20; ++gy) {
      const double re = -0.5 + (gx + 0.5) / 40.0;
      const double im = 0.87 + 3.2 * gy / 19.0;
      Complex jv, jd;
      j_and_derivative(Complex(re, im), jv, jd);
      graded.emplace_back(std::abs(jv - c), Complex(re, im));
    }
  std::sort(graded.begin(), graded.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (int i = 0; i < 12 && i < (int)graded.size(); ++i) seeds.push_back(graded[i].second);

  for (const Complex& seed : seeds) {
    Complex t = seed;
    for (int iter = 0; iter < 80; ++iter) {
      Complex jv, jd;
      j_and_derivative(t, jv, jd);
      if (std::abs(jv - c) <= tol) {
        const auto red = sl2z::reduce_to_fundamental_domain(TauPoint(t));
        return red.tau;
      }
      if (jd == Complex(0, 0)) break;
      Complex step = -(jv - c) / jd;
      // Damp to stay in the upper half plane and keep steps modest near the
      // ramification points i and rho where j' vanishes.
      int halvings = 0;
      while ((t + step).imag() < 0.05 || std::abs(step) > 1.5) {
        step *= 0.5;
        if (++halvings > 60) break;
      }
      t += step;
    }
  }
  throw ConvergenceError("invert_j: Newton iteration failed for the requested value");
}

NodalPoint nodal_param(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw std::invalid_argument("nodal_param: w must be finite");
  if (w == Complex(1, 0)) throw std::domain_error("nodal_param: w = 1 is the pole of the chart");
  const Complex d = w - 1.0;
  const Complex X = 1.0 / 3.0 + 4.0 * w / (d * d);
  const Complex Y = 8.0 * w * (w + 1.0) / (d * d * d);
  return {X, Y};
}

} // namespace modcurve::analytic
