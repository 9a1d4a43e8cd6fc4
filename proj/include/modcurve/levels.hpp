#pragma once

// Level-m arithmetic for the principal congruence subgroup SL2(Z)[m]: group
// order, cusp count, Euler characteristics and the genus of the compactified
// level-m curve, plus a brute-force cusp enumerator used as an oracle.

#include "modcurve/numeric.hpp"

namespace modcurve::levels {

struct LevelSummary {
  long m = 0;
  Integer d;            // |SL2(Z/m)|
  Integer cusps;        // c_m = d_m / (2m)
  Rational chi_open;    // chi of the open level-m curve, -d_m/12
  Rational chi_compact; // c_m + chi_open
  Integer genus;        // 1 - chi_compact/2
};

// All fields exact; requires m >= 3 (the closed formulas carry that
// hypothesis). The genus is cross-checked against the direct product
// formula before returning.
LevelSummary level_summary(long m);

// Counts primitive vectors of (Z/m)^2 modulo +-1, for 3 <= m <= 12; an
// enumeration-based oracle for the cusp count c_m.
long enumerate_cusps(long m);

} // namespace modcurve::levels
