#include "modcurve/lattice.hpp"

#include <cmath>

namespace modcurve::lattice {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr double kMatchTol = 1e-9;
} // namespace

FramedLattice::FramedLattice(Complex l1, Complex l2) : lambda1(l1), lambda2(l2) {
  if (!std::isfinite(l1.real()) || !std::isfinite(l1.imag()) || !std::isfinite(l2.real()) ||
      !std::isfinite(l2.imag()))
    throw std::invalid_argument("FramedLattice: components must be finite");
  if (l1 == Complex(0, 0) || std::imag(l2 / l1) == 0.0)
    throw std::invalid_argument("FramedLattice: basis vectors are R-dependent");
}

bool FramedLattice::positively_framed() const { return std::imag(lambda2 / lambda1) > 0; }

GaussReduction gauss_reduce(const FramedLattice& L) {
  Complex u = L.lambda1, v = L.lambda2;
  // (u; v) = M (lambda1; lambda2)
  Integer m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  if (std::imag(v / u) < 0) { // fix the orientation first
    v = -v;
    m21 = -m21;
    m22 = -m22;
  }

  auto shift = [&]() {
    const double r = std::floor(std::real(v / u) + 0.5);
    if (r != 0) {
      v -= r * u;
      Integer ri(r);
      m21 -= ri * m11;
      m22 -= ri * m12;
    }
  };
  auto swap_s = [&]() { // (u, v) -> (v, -u), i.e. tau -> -1/tau
    std::swap(u, v);
    std::swap(m11, m21);
    std::swap(m12, m22);
    v = -v;
    m21 = -m21;
    m22 = -m22;
  };

  bool reduced = false;
  for (int step = 0; step < 10000; ++step) {
    shift();
    if (std::abs(v) < std::abs(u)) {
      swap_s();
    } else {
      reduced = true;
      break;
    }
  }
  if (!reduced) throw ConvergenceError("gauss_reduce: reduction did not terminate");

  // Canonical position on the boundary of F.
  Complex tau = v / u;
  if (tau.real() >= 0.5 - kBoundaryTol) {
    v -= u;
    m21 -= m11;
    m22 -= m12;
    tau = v / u;
  }
  if (std::abs(std::abs(tau) - 1.0) <= kBoundaryTol && tau.real() > 0) {
    swap_s();
    tau = v / u;
  }

  GaussReduction out{FramedLattice(u, v), sl2z::TauPoint(tau), m11, m12, m21, m22};
  return out;
}

namespace {

// Coordinates of w in the basis (l1, l2), as reals.
void real_coordinates(Complex w, Complex l1, Complex l2, double& x, double& y) {
  const double det = l1.real() * l2.imag() - l2.real() * l1.imag();
  x = (w.real() * l2.imag() - l2.real() * w.imag()) / det;
  y = (l1.real() * w.imag() - w.real() * l1.imag()) / det;
}

// True when w lies in the lattice spanned by (l1, l2), i.e. has near-integer
// coordinates.
bool is_integral(Complex w, Complex l1, Complex l2, double tol) {
  double x, y;
  real_coordinates(w, l1, l2, x, y);
  return std::abs(x - std::round(x)) <= tol * (1 + std::abs(x)) &&
         std::abs(y - std::round(y)) <= tol * (1 + std::abs(y));
}

} // namespace

std::optional<Complex> tori_isomorphic(const FramedLattice& L1, const FramedLattice& L2) {
  const GaussReduction r1 = gauss_reduce(L1);
  const GaussReduction r2 = gauss_reduce(L2);
  const Complex t1 = r1.tau.value, t2 = r2.tau.value;
  if (std::abs(t1 - t2) > kMatchTol * (1 + std::abs(t1))) return std::nullopt;

  const Complex c = r2.basis.lambda1 / r1.basis.lambda1;
  // Certify c*Lambda1 = Lambda2 by an integral change of basis both ways.
  if (!is_integral(c * L1.lambda1, L2.lambda1, L2.lambda2, kMatchTol)) return std::nullopt;
  if (!is_integral(c * L1.lambda2, L2.lambda1, L2.lambda2, kMatchTol)) return std::nullopt;
  if (!is_integral(L2.lambda1 / c, L1.lambda1, L1.lambda2, kMatchTol)) return std::nullopt;
  if (!is_integral(L2.lambda2 / c, L1.lambda1, L1.lambda2, kMatchTol)) return std::nullopt;
  return c;
}

AutomorphismGroup automorphism_group(const FramedLattice& L) {
  const GaussReduction r = gauss_reduce(L);
  const Complex tau = r.tau.value;
  const Complex rho(-0.5, std::sqrt(3.0) / 2.0);
  if (std::abs(tau - Complex(0, 1)) <= kMatchTol) return {4, Complex(0, 1)};
  if (std::abs(tau - rho) <= kMatchTol) return {6, std::polar(1.0, M_PI / 3.0)};
  return {2, Complex(-1, 0)};
}

} // namespace modcurve::lattice
