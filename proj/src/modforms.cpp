#include "modcurve/modforms.hpp"

#include "modcurve/simd/kernels.hpp"

#include <cmath>

namespace modcurve::modforms {

long dim_M(long w) {
  if (w < 0 || w % 2 != 0) return 0;
  const long k = w / 2;
  if (k % 6 == 1) return k / 6;
  return 1 + k / 6;
}

std::vector<std::pair<int, int>> monomial_basis(long w) {
  std::vector<std::pair<int, int>> out;
  if (w < 0 || w % 2 != 0) return out;
  for (long beta = 0; 6 * beta <= w; ++beta) {
    const long rest = w - 6 * beta;
    if (rest % 4 == 0) out.emplace_back((int)(rest / 4), (int)beta);
  }
  return out;
}

long cusp_dim(long w) {
  if (w < 4 || w % 2 != 0) return 0;
  return dim_M(w) - 1;
}

bool valence_check(long weight, const OrderVector& orders) {
  if (weight <= 0 || weight % 2 != 0)
    throw std::invalid_argument("valence_check: weight must be even and positive");
  Rational total = Rational(orders.nu_i) / 2 + Rational(orders.nu_rho) / 3 + Rational(orders.nu_infty);
  for (const auto& [label, nu] : orders.nu_other) {
    (void)label;
    total += Rational(nu);
  }
  return total == frac(weight / 2, 6);
}

FormExpression FormExpression::monomial(int alpha, int beta, const Rational& coeff) {
  FormExpression f;
  f.add_term(alpha, beta, coeff);
  return f;
}

FormExpression FormExpression::delta() {
  FormExpression f;
  f.add_term(3, 0, Rational(1, 1728));
  f.add_term(0, 2, Rational(-1, 1728));
  return f;
}

FormExpression& FormExpression::add_term(int alpha, int beta, const Rational& coeff) {
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("FormExpression: exponents must be nonnegative");
  const long w = 4L * alpha + 6L * beta;
  if (weight_ < 0) weight_ = w;
  if (w != weight_)
    throw std::invalid_argument("FormExpression: mixed weights (homogeneity violated)");
  auto [it, inserted] = terms_.try_emplace({alpha, beta}, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

FormExpression FormExpression::scaled(const Rational& c) const {
  FormExpression out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono.first, mono.second, coeff * c);
  if (out.terms_.empty()) out.weight_ = weight_;
  return out;
}

qseries::LaurentSeriesQ FormExpression::q_expansion(long terms) const {
  using namespace qseries;
  LaurentSeriesQ acc = LaurentSeriesQ::zero(terms);
  const LaurentSeriesQ e4 = eisenstein_normalized(4, terms);
  const LaurentSeriesQ e6 = eisenstein_normalized(6, terms);
  for (const auto& [mono, coeff] : terms_) {
    LaurentSeriesQ m = LaurentSeriesQ::one(terms);
    if (mono.first > 0) m = series_mul(m, series_pow(e4, mono.first));
    if (mono.second > 0) m = series_mul(m, series_pow(e6, mono.second));
    acc = series_add(acc, series_scale(coeff, m));
  }
  return acc;
}

bool FormExpression::is_cusp_form() const {
  if (terms_.empty()) return true;
  // The constant q-coefficient of E4^a E6^b is 1, so the constant term of
  // the combination is just the sum of the coefficients.
  Rational c0(0);
  for (const auto& [mono, coeff] : terms_) {
    (void)mono;
    c0 += coeff;
  }
  return c0 == 0;
}

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kNodes = 128;
constexpr double kCutoffY = 8.0;
constexpr long kSeriesTerms = 64;

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign((size_t)n, 0.0);
  w.assign((size_t)n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-based initial guess.
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[(size_t)i] = t;
    w[(size_t)i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

struct Accum {
  double sum = 0, comp = 0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

std::vector<double> cusp_coeffs(const FormExpression& f) {
  const auto series = f.q_expansion(kSeriesTerms);
  std::vector<double> c((size_t)kSeriesTerms, 0.0);
  for (long e = series.lead(); e < series.prec(); ++e)
    if (e >= 0 && e < kSeriesTerms) c[(size_t)e] = series.coeff(e).get_d();
  return c;
}

struct GLTable {
  std::vector<double> x, w;
};

const GLTable& gl_table() {
  static const GLTable t = [] {
    GLTable t;
    gauss_legendre(kNodes, t.x, t.w);
    return t;
  }();
  return t;
}

} // namespace

Complex petersson(const FormExpression& f, const FormExpression& g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("petersson: empty form expression");
  const long w = f.weight();
  if (g.weight() != w) throw std::invalid_argument("petersson: weights must agree");
  if (w % 2 != 0 || w < 12)
    throw std::invalid_argument("petersson: requires even weight >= 12 cusp forms");
  if (!f.is_cusp_form() || !g.is_cusp_form())
    throw std::domain_error("petersson: integrand for non-cusp forms diverges at the cusp");

  const std::vector<double>& nodes = gl_table().x;
  const std::vector<double>& weights = gl_table().w;

  const std::vector<double> fc = cusp_coeffs(f);
  const std::vector<double> gc = cusp_coeffs(g);
  const auto& kern = simd::active_kernels();

  Accum acc_re, acc_im;
  std::vector<double> qre((size_t)kNodes), qim((size_t)kNodes);
  std::vector<double> fre((size_t)kNodes), fim((size_t)kNodes);
  std::vector<double> gre((size_t)kNodes), gim((size_t)kNodes);
  std::vector<double> ys((size_t)kNodes), wy((size_t)kNodes);

  for (int ix = 0; ix < kNodes; ++ix) {
    const double x = nodes[(size_t)ix] / 2.0; // Re tau in [-1/2, 1/2]
    const double wx = weights[(size_t)ix] / 2.0;
    const double y0 = std::sqrt(1.0 - x * x); // lower arc of F
    const double half = (kCutoffY - y0) / 2.0;
    const Complex phase = std::exp(Complex(0, 2 * kPi * x));
    for (int iy = 0; iy < kNodes; ++iy) {
      const double y = y0 + half * (nodes[(size_t)iy] + 1.0);
      ys[(size_t)iy] = y;
      wy[(size_t)iy] = weights[(size_t)iy] * half;
      const double r = std::exp(-2 * kPi * y);
      qre[(size_t)iy] = r * phase.real();
      qim[(size_t)iy] = r * phase.imag();
    }
    kern.eval_poly_many(fc.data(), fc.size(), qre.data(), qim.data(), (size_t)kNodes, fre.data(),
                        fim.data());
    kern.eval_poly_many(gc.data(), gc.size(), qre.data(), qim.data(), (size_t)kNodes, gre.data(),
                        gim.data());
    for (int iy = 0; iy < kNodes; ++iy) {
      const Complex fv(fre[(size_t)iy], fim[(size_t)iy]);
      const Complex gv(gre[(size_t)iy], gim[(size_t)iy]);
      const double measure = wx * wy[(size_t)iy] * std::pow(ys[(size_t)iy], (double)(w - 2));
      const Complex term = fv * std::conj(gv) * measure;
      acc_re.add(term.real());
      acc_im.add(term.imag());
    }
  }
  return Complex(acc_re.value(), acc_im.value());
}

} // namespace modcurve::modforms
