#pragma once

// Exact truncated Laurent series in q over Q: Bernoulli numbers, divisor
// sums, the normalized Eisenstein series E_{2k}, Delta and j, plus the ring
// operations they need. Everything here is exact rational arithmetic; the
// floating-point evaluation lives in the analytic module.

#include "modcurve/numeric.hpp"

#include <string>
#include <vector>

namespace modcurve::qseries {

// A Laurent series truncated to O(q^prec): coefficients are exact for all
// exponents below prec(). Arithmetic tracks precision so results never claim
// more accuracy than their inputs support.
class LaurentSeriesQ {
public:
  // Series with the given leading exponent and coefficients; precision is
  // lead + coeffs.size().
  LaurentSeriesQ(long lead, std::vector<Rational> coeffs);

  // The zero series known modulo O(q^prec).
  static LaurentSeriesQ zero(long prec);
  // The constant-1 series known modulo O(q^prec).
  static LaurentSeriesQ one(long prec);

  long lead() const { return lead_; }
  long prec() const { return lead_ + (long)coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of q^e; exact 0 below the leading exponent, error at or
  // beyond the precision.
  Rational coeff(long e) const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  LaurentSeriesQ truncated(long new_prec) const;

  std::string to_string() const; // e.g. "q^-1 + 744 + 196884*q + O(q^2)"

private:
  long lead_;
  std::vector<Rational> coeffs_;
  void normalize();
};

LaurentSeriesQ series_add(const LaurentSeriesQ& f, const LaurentSeriesQ& g);
LaurentSeriesQ series_sub(const LaurentSeriesQ& f, const LaurentSeriesQ& g);
LaurentSeriesQ series_scale(const Rational& c, const LaurentSeriesQ& f);
LaurentSeriesQ series_mul(const LaurentSeriesQ& f, const LaurentSeriesQ& g);
// Requires a nonzero leading coefficient.
LaurentSeriesQ series_inv(const LaurentSeriesQ& f);
LaurentSeriesQ series_pow(const LaurentSeriesQ& f, long e);

// Coefficientwise equality on the common known range.
bool series_agree(const LaurentSeriesQ& f, const LaurentSeriesQ& g);

// Bernoulli number B_n for the generating function x/(e^x - 1), so
// B_1 = -1/2 and B_{2k+1} = 0 for k >= 1.
Rational bernoulli(int n);

// Divisor power sum sigma_k(n) = sum_{d | n} d^k.
Integer sigma(int k, const Integer& n);

// Normalized Eisenstein series E_w = 1 - (2w/B_w) sum sigma_{w-1}(n) q^n for
// even w >= 4, truncated to O(q^terms).
LaurentSeriesQ eisenstein_normalized(int weight, long terms);

// Delta / (2 pi)^12 = q prod (1-q^n)^24, truncated to O(q^terms). Computed
// both from the product and as (E4^3 - E6^2)/1728; the two expansions are
// checked against each other coefficient by coefficient.
LaurentSeriesQ delta_normalized(long terms);

// j = E4^3 / Delta_normalized = 1/q + 744 + 196884 q + ..., to O(q^terms).
LaurentSeriesQ j_series(long terms);

// JSON round trip with schema {"lead": int, "prec": int, "coeffs": ["p/q", ...]}.
std::string series_to_json(const LaurentSeriesQ& f);
LaurentSeriesQ series_from_json(const std::string& text);

} // namespace modcurve::qseries
