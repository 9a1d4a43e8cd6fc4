#pragma once

// Floating-point evaluation on the upper half plane: Eisenstein series by
// direct lattice sum (the oracle) and by q-series (fast), g2/g3/Delta/j, the
// Weierstrass pe-function and its derivative, the projective embedding,
// Newton inversion of j, and the nodal-cubic parametrization.

#include "modcurve/lattice.hpp"
#include "modcurve/numeric.hpp"
#include "modcurve/sl2z.hpp"

namespace modcurve::analytic {

// zeta(k) for even k >= 2, from the Bernoulli relation
// zeta(2m) = -(2 pi i)^{2m} B_{2m} / (2 (2m)!).
double zeta_even(int k);

// Truncated sum of lambda^-k over the lattice spanned by (1, tau) resp. a
// general framed basis. Points are taken from the disk |lambda| <= radius*s,
// s the shortest-vector length, so truncation error decays by angular
// cancellation and the sum scales exactly under lattice scaling. Serves as
// the q-series-independent oracle.
Complex eisenstein_lattice_sum(int k, const sl2z::TauPoint& tau, int radius);
Complex eisenstein_lattice_sum(int k, const lattice::FramedLattice& L, int radius);

struct ModularValues {
  Complex E4, E6; // normalized Eisenstein values, constant term 1
  Complex g2, g3; // 60 G4 and 140 G6
  Complex delta;  // g2^3 - 27 g3^2
  Complex j;      // 1728 g2^3 / delta
};

// Evaluates by reducing tau into F (so |q| <= exp(-pi sqrt(3))) and applying
// the factor of automorphy on the way back.
ModularValues eval_modular(const sl2z::TauPoint& tau);

struct WpValue {
  Complex p, p_prime;
};

// Weierstrass pe and pe' for the lattice Z + Z tau (or a general framed
// basis). z is first reduced to the nearest-point cell; small arguments use
// the Laurent expansion, the rest the defining lattice sum with controlled
// truncation tails.
WpValue wp(const sl2z::TauPoint& tau, Complex z);
WpValue wp(const lattice::FramedLattice& L, Complex z);

// The two evaluation routes behind wp, exposed so they can be compared on
// the annulus where both apply: the Laurent expansion around 0 (valid for
// |z| below the shortest vector length) and the defining lattice sum.
WpValue wp_via_series(const lattice::FramedLattice& L, Complex z);
WpValue wp_via_lattice_sum(const lattice::FramedLattice& L, Complex z);

struct ProjectivePoint {
  Complex x, y, z;
};

// [pe, pe', 1] on the cubic zy^2 = 4x^3 - g2 x z^2 - g3 z^3; lattice points
// map to [0, 1, 0].
ProjectivePoint embed(const sl2z::TauPoint& tau, Complex z);

// tau in F with j(tau) = c, via damped Newton with grid seeding; c = 0 and
// c = 1728 short-circuit to rho and i.
sl2z::TauPoint invert_j(Complex c);

struct NodalPoint {
  Complex X, Y;
};

// Parametrization of the nodal cubic Y^2 = (4/27)(3X+2)(3X-1)^2 by
// w in P^1 - {1}: X = 1/3 + 4w/(w-1)^2, Y = 8w(w+1)/(w-1)^3.
NodalPoint nodal_param(Complex w);

} // namespace modcurve::analytic
