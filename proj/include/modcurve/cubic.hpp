#pragma once

// Weierstrass plane cubics y^2 = 4x^3 - ax - b: discriminant, smoothness,
// j-invariant, isomorphism under the weight-(4,6) scaling action,
// automorphism orders and the round trip back to tau.

#include "modcurve/analytic.hpp"
#include "modcurve/numeric.hpp"

#include <optional>

namespace modcurve::cubic {

struct WeierstrassCurve {
  Complex a, b;
};

// Exact variant used where the scaling laws should hold on the nose.
struct WeierstrassCurveQ {
  Rational a, b;
};

Complex discriminant(const WeierstrassCurve& C);  // a^3 - 27 b^2
Rational discriminant(const WeierstrassCurveQ& C);

bool is_smooth(const WeierstrassCurve& C);
bool is_smooth(const WeierstrassCurveQ& C);

// 1728 a^3 / (a^3 - 27 b^2); throws on singular curves.
Complex j_invariant(const WeierstrassCurve& C);

// u with (A, B) = (u^4 a, u^6 b), or nullopt. The scaling uses the
// weight-(4, 6) action, equivalent over C to the (u^2, u^3) form.
std::optional<Complex> isomorphic(const WeierstrassCurve& C1, const WeierstrassCurve& C2);

// 4 when b = 0 (j = 1728), 6 when a = 0 (j = 0), else 2.
int automorphism_order(const WeierstrassCurve& C);

struct TauScale {
  sl2z::TauPoint tau;
  Complex lambda; // (lambda^-4 g2(tau), lambda^-6 g3(tau)) = (a, b)
};

TauScale tau_from_curve(const WeierstrassCurve& C);

} // namespace modcurve::cubic
