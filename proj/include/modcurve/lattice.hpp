#pragma once

// Framed lattices in C: shortest-vector (Gauss) reduction with an exact
// integral change-of-basis certificate, torus isomorphism testing, and
// automorphism groups.

#include "modcurve/numeric.hpp"
#include "modcurve/sl2z.hpp"

#include <optional>

namespace modcurve::lattice {

// An ordered basis (lambda1, lambda2) of a lattice in C. The frame is
// positive when Im(lambda2/lambda1) > 0.
struct FramedLattice {
  Complex lambda1, lambda2;

  FramedLattice(Complex l1, Complex l2);
  bool positively_framed() const;
};

struct GaussReduction {
  FramedLattice basis;          // (u, v): u shortest, Im(v/u) > 0, v/u in F
  sl2z::TauPoint tau;           // v/u, canonical in F
  // Certificate: (u; v) = M * (lambda1; lambda2) with det M = +-1.
  Integer m11, m12, m21, m22;

  Integer certificate_det() const { return m11 * m22 - m12 * m21; }
};

// Reduces the basis itself (nearest-integer shifts and swaps), so the
// integral certificate is produced alongside the floating result.
GaussReduction gauss_reduce(const FramedLattice& L);

// Returns c with c*L1 = L2 (up to an automorphism unit of the lattice),
// or nullopt when the tori are not isomorphic.
std::optional<Complex> tori_isomorphic(const FramedLattice& L1, const FramedLattice& L2);

struct AutomorphismGroup {
  int order;         // 2, 4 or 6
  Complex generator; // a primitive root of unity of that order
};

AutomorphismGroup automorphism_group(const FramedLattice& L);

} // namespace modcurve::lattice
