#pragma once

// Orbifold Euler characteristics (stratified and simplicial), orbifold
// divisors on the moduli curve and its compactification, and the divisor
// class / Picard group calculators wired through the explicit isomorphisms
//   Cl(open, reduced) = Z/6,  Cl(compactified, reduced) = Z generated by
//   the square of the Hodge class, Pic(compactified) = Z.

#include "modcurve/numeric.hpp"

#include <string>
#include <vector>

namespace modcurve::orbifold {

// One stratum: its ordinary Euler characteristic and the order of the
// automorphism group attached to its points.
struct Stratum {
  long euler = 0;
  long aut_order = 1;
};

// Sum of euler_i / aut_i, exactly.
Rational stratified_euler(const std::vector<Stratum>& strata);

// A finite simplicial complex with a group action given by vertex
// permutations. simplices[k] lists the k-simplices as sorted vertex tuples.
struct EquivariantComplex {
  int num_vertices = 0;
  std::vector<std::vector<std::vector<int>>> simplices;
  std::vector<std::vector<int>> generators; // vertex permutations
};

// Orbifold Euler characteristic sum_k (-1)^k sum_orbits 1/|stabilizer|.
// Throws when a generator fails to preserve the complex.
Rational simplicial_euler(const EquivariantComplex& K);

// JSON loaders for the CLI surface.
EquivariantComplex complex_from_json(const std::string& text);
std::vector<Stratum> strata_from_json(const std::string& text);

// Which curve a divisor lives on. Point automorphism orders are pinned per
// ambient: on the reduced curves [i] carries 2 and [rho] carries 3; on the
// unreduced ones they carry 4 and 6 and every other point carries 2.
enum class Ambient { Open, OpenReduced, Compactified, CompactifiedReduced };

// The points with special automorphisms use the fixed labels "i" and "rho";
// the cusp is "infinity" (only on the compactified curves); anything else is
// a generic point label.
struct DivisorEntry {
  std::string point;
  long aut_order = 1;
  Integer numerator; // the entry contributes numerator/aut_order * [point]
};

struct OrbifoldDivisor {
  Ambient ambient;
  std::vector<DivisorEntry> entries;

  // Validates the aut orders against the ambient rules.
  OrbifoldDivisor(Ambient amb, std::vector<DivisorEntry> es);
};

// Expected automorphism order of a labelled point on the given curve.
long ambient_aut_order(Ambient amb, const std::string& point);

Rational divisor_degree(const OrbifoldDivisor& D);

// Class in Cl of the open reduced curve, = (3 n_i + 2 n_rho) mod 6; generic
// points are principal there.
int class_in_Cl_red(const OrbifoldDivisor& D);

// Class in Cl of the compactified reduced curve, in units of the square of
// the Hodge class: 3 n_i + 2 n_rho + 6 sum n_P.
Integer class_in_Cl_mbar_red(const OrbifoldDivisor& D);

struct PicardClass {
  Integer mbar_class;  // class of L_k(d infinity) in Pic of the compactification
  long m11_class_mod12; // restriction to the open curve, in Z/12
};

// [L_k(d infinity)] = k + 12 d in Pic(compactified) = Z.
PicardClass picard_class_mbar(long weight, long twist);

} // namespace modcurve::orbifold
