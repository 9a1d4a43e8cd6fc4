#pragma once

// Structure of the graded ring of level-1 modular forms: dimension formulas,
// monomial bases in E4 and E6, the valence (order-sum) checker, and the
// Petersson inner product of cusp forms by quadrature over the fundamental
// domain.

#include "modcurve/numeric.hpp"
#include "modcurve/qseries.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace modcurve::modforms {

// dim M_w: 0 for odd, negative, or weight-2; else with k = w/2 it is
// floor(k/6) when k = 1 mod 6 and 1 + floor(k/6) otherwise.
long dim_M(long w);

// All (alpha, beta) with 4 alpha + 6 beta = w; the count equals dim_M(w).
std::vector<std::pair<int, int>> monomial_basis(long w);

// dim of the cusp subspace: dim_M(w) - 1 for even w >= 4, else 0.
long cusp_dim(long w);

// Orders of vanishing of a weight-w form at the special points, the cusp,
// and any further points.
struct OrderVector {
  Integer nu_i, nu_rho, nu_infty;
  std::vector<std::pair<std::string, Integer>> nu_other;
};

// True when nu_i/2 + nu_rho/3 + nu_infty + sum nu_P = (w/2)/6 exactly.
bool valence_check(long weight, const OrderVector& orders);

// A rational linear combination of monomials E4^alpha E6^beta of one weight.
class FormExpression {
public:
  FormExpression() = default;

  static FormExpression monomial(int alpha, int beta, const Rational& coeff = Rational(1));
  // Delta = (E4^3 - E6^2)/1728, the normalized weight-12 cusp form.
  static FormExpression delta();

  FormExpression& add_term(int alpha, int beta, const Rational& coeff);
  FormExpression scaled(const Rational& c) const;

  bool empty() const { return terms_.empty(); }
  long weight() const { return weight_; }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  qseries::LaurentSeriesQ q_expansion(long terms) const;
  bool is_cusp_form() const;

private:
  long weight_ = -1; // -1 until the first term fixes it
  std::map<std::pair<int, int>, Rational> terms_;
};

// Petersson inner product of two cusp forms of one even weight >= 12,
// integrated over the truncated fundamental domain with tensor-product
// Gauss-Legendre quadrature (cutoff Y = 8, 128 x 128 nodes).
Complex petersson(const FormExpression& f, const FormExpression& g);

} // namespace modcurve::modforms
