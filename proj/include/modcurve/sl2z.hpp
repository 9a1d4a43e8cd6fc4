#pragma once

// Exact SL2(Z) arithmetic: composition, Moebius action on the upper half
// plane, reduction into the fundamental domain
//   F = { tau : |Re tau| <= 1/2, |tau| >= 1 },
// decomposition into words in the generators S, T, reduction mod m, and
// abelianization of finite presentations via Smith normal form.

#include "modcurve/numeric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace modcurve::sl2z {

// 2x2 integer matrix of determinant 1.
struct UnimodularMatrix {
  Integer a{1}, b{0}, c{0}, d{1};

  UnimodularMatrix() = default;
  UnimodularMatrix(Integer a_, Integer b_, Integer c_, Integer d_);

  Integer det() const { return a * d - b * c; }

  bool operator==(const UnimodularMatrix&) const = default;

  UnimodularMatrix inverse() const { return UnimodularMatrix(d, -b, -c, a); }
  UnimodularMatrix negated() const;

  std::string to_string() const;
};

// The standard generators.
const UnimodularMatrix& identity();
const UnimodularMatrix& gen_S();     // (0 -1; 1 0), order 4
const UnimodularMatrix& gen_T();     // (1 1; 0 1)
const UnimodularMatrix& gen_T_hat(); // (1 0; 1 1) = T*S*T
const UnimodularMatrix& gen_U();     // S*T = (0 -1; 1 1), order 6

UnimodularMatrix compose(const UnimodularMatrix& g, const UnimodularMatrix& h);

// Entries reduced into [0, m).
std::array<Integer, 4> reduce_mod(const UnimodularMatrix& g, const Integer& m);

// A point of the upper half plane.
struct TauPoint {
  Complex value;

  explicit TauPoint(Complex v);
  double re() const { return value.real(); }
  double im() const { return value.imag(); }
};

// Moebius action tau -> (a tau + b)/(c tau + d).
TauPoint act(const UnimodularMatrix& g, const TauPoint& tau);

struct ReductionResult {
  TauPoint tau;           // canonical representative in F
  UnimodularMatrix gamma; // gamma * input = tau
};

// Reduces tau into F. The representative is canonical: -1/2 <= Re < 1/2,
// and Re <= 0 when |tau| = 1 (to 1e-12), so equal outputs mean equal orbits.
ReductionResult reduce_to_fundamental_domain(const TauPoint& tau);

enum class Generator { S, SInv, T, TInv };

std::string generator_name(Generator g);
const UnimodularMatrix& generator_matrix(Generator g);

// A word in S, T with an explicit sign absorbing the center {+-I}:
// sign * (product of tokens) reproduces the source matrix exactly.
struct GeneratorWord {
  std::vector<Generator> tokens;
  int sign = 1;
};

// Product of the tokens, without the sign.
UnimodularMatrix evaluate(const GeneratorWord& word);

// Matrix the word stands for, sign included.
UnimodularMatrix reconstruct(const GeneratorWord& word);

// Expresses g as a signed word in S, T by reducing g * (2i) back into F
// with exact rational arithmetic. The result is verified by exact
// multiplication before it is returned.
GeneratorWord word_decompose(const UnimodularMatrix& g);

// 4 on the orbit of i, 6 on the orbit of rho = exp(2 pi i/3), else 2.
int stabilizer_order(const TauPoint& tau);

// |SL2(Z/m)| = m^3 prod_{p | m} (1 - 1/p^2), exactly.
Integer sl2_mod_order(const Integer& m);

// Finitely presented abelian group: relations are integer vectors over the
// generators.
struct AbelianPresentation {
  int num_generators = 0;
  std::vector<std::vector<Integer>> relations;
};

// Diagonal of the Smith normal form of an integer matrix, with the
// divisibility chain d1 | d2 | ... and nonnegative entries.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> mat);

// Invariant factors of the presented group: d1 | d2 | ..., trivial factors
// (= 1) omitted, one 0 per free summand.
std::vector<Integer> abelianize(const AbelianPresentation& p);

} // namespace modcurve::sl2z
