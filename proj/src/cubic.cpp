#include "modcurve/cubic.hpp"

#include <cmath>

namespace modcurve::cubic {

namespace {

constexpr double kZeroTol = 1e-9;
constexpr double kMatchTol = 1e-9;

// Scale of the (a, b) pair respecting the weights 4 and 6.
double curve_scale(const WeierstrassCurve& C) {
  return std::max(std::pow(std::abs(C.a), 0.25), std::pow(std::abs(C.b), 1.0 / 6.0));
}

bool a_vanishes(const WeierstrassCurve& C) {
  const double s = curve_scale(C);
  return std::abs(C.a) <= kZeroTol * std::pow(s, 4);
}

bool b_vanishes(const WeierstrassCurve& C) {
  const double s = curve_scale(C);
  return std::abs(C.b) <= kZeroTol * std::pow(s, 6);
}

Complex principal_root(Complex w, int n) {
  if (w == Complex(0, 0)) return Complex(0, 0);
  return std::exp(std::log(w) / (double)n);
}

bool close_rel(Complex x, Complex y, double tol) {
  return std::abs(x - y) <= tol * (1 + std::abs(x) + std::abs(y));
}

} // namespace

Complex discriminant(const WeierstrassCurve& C) { return C.a * C.a * C.a - 27.0 * C.b * C.b; }

Rational discriminant(const WeierstrassCurveQ& C) {
  return rat_pow(C.a, 3) - 27 * C.b * C.b;
}

bool is_smooth(const WeierstrassCurve& C) {
  const double scale =
      std::pow(std::abs(C.a), 3) + std::pow(std::abs(C.b), 2) + 1.0;
  return std::abs(discriminant(C)) > 1e-12 * scale;
}

bool is_smooth(const WeierstrassCurveQ& C) { return discriminant(C) != 0; }

Complex j_invariant(const WeierstrassCurve& C) {
  if (!is_smooth(C)) throw std::domain_error("j_invariant: singular curve (discriminant is zero)");
  const Complex a3 = C.a * C.a * C.a;
  return 1728.0 * a3 / (a3 - 27.0 * C.b * C.b);
}

std::optional<Complex> isomorphic(const WeierstrassCurve& C1, const WeierstrassCurve& C2) {
  if (!is_smooth(C1) || !is_smooth(C2))
    throw std::domain_error("isomorphic: both curves must be smooth");

  const bool a1z = a_vanishes(C1), a2z = a_vanishes(C2);
  const bool b1z = b_vanishes(C1), b2z = b_vanishes(C2);
  if (a1z != a2z || b1z != b2z) return std::nullopt;

  Complex u;
  if (a1z) {
    u = principal_root(C2.b / C1.b, 6);
  } else if (b1z) {
    u = principal_root(C2.a / C1.a, 4);
  } else {
    u = std::sqrt((C2.b * C1.a) / (C1.b * C2.a));
  }
  const Complex u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
  if (!close_rel(C2.a, u4 * C1.a, kMatchTol)) return std::nullopt;
  if (!close_rel(C2.b, u6 * C1.b, kMatchTol)) return std::nullopt;
  return u;
}

int automorphism_order(const WeierstrassCurve& C) {
  if (!is_smooth(C)) throw std::domain_error("automorphism_order: singular curve");
  if (b_vanishes(C)) return 4;
  if (a_vanishes(C)) return 6;
  return 2;
}

TauScale tau_from_curve(const WeierstrassCurve& C) {
  if (!is_smooth(C)) throw std::domain_error("tau_from_curve: singular curve");
  const Complex j = j_invariant(C);
  const sl2z::TauPoint tau = analytic::invert_j(j);
  const analytic::ModularValues mv = analytic::eval_modular(tau);

  Complex lambda;
  if (b_vanishes(C)) {
    lambda = principal_root(mv.g2 / C.a, 4);
  } else if (a_vanishes(C)) {
    lambda = principal_root(mv.g3 / C.b, 6);
  } else {
    lambda = std::sqrt((C.a * mv.g3) / (C.b * mv.g2));
  }

  const Complex l2 = lambda * lambda, l4 = l2 * l2, l6 = l4 * l2;
  constexpr double tol = 1e-7;
  if (!a_vanishes(C) && !close_rel(mv.g2 / l4, C.a, tol))
    throw std::runtime_error("tau_from_curve: scale recovery is internally inconsistent");
  if (!b_vanishes(C) && !close_rel(mv.g3 / l6, C.b, tol))
    throw std::runtime_error("tau_from_curve: scale recovery is internally inconsistent");
  return {tau, lambda};
}

} // namespace modcurve::cubic
