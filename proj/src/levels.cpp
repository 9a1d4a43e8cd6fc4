#include "modcurve/levels.hpp"

#include <numeric>

namespace modcurve::levels {

LevelSummary level_summary(long m) {
  if (m < 3)
    throw std::invalid_argument(
        "level_summary: the closed formulas require m >= 3 (m = 1, 2 have extra orbifold/cusp structure)");

  LevelSummary out;
  out.m = m;
  const Integer mi(m);

  out.d = mi * mi * mi;
  Rational local_product(1); // prod (1 - 1/p^2)
  for (const auto& [p, e] : factorize(mi)) {
    (void)e;
    out.d /= p * p;
    out.d *= p * p - 1;
    local_product *= frac(p * p - 1, p * p);
  }

  Integer rem;
  const Integer two_m = 2 * mi;
  mpz_fdiv_qr(out.cusps.get_mpz_t(), rem.get_mpz_t(), out.d.get_mpz_t(), two_m.get_mpz_t());
  if (rem != 0) throw std::logic_error("level_summary: d_m is not divisible by 2m");

  out.chi_open = Rational(-out.d) / 12;
  out.chi_compact = Rational(out.cusps) + out.chi_open;

  const Rational genus_from_chi = 1 - out.chi_compact / 2;
  // Direct formula: g_m = 1 - (m^2/4)(1 - m/6) prod (1 - 1/p^2)
  const Rational genus_direct = 1 - frac(mi * mi, 4) * (1 - frac(m, 6)) * local_product;
  if (genus_from_chi != genus_direct)
    throw std::logic_error("level_summary: genus cross-check failed");
  if (genus_from_chi.get_den() != 1 || genus_from_chi < 0)
    throw std::logic_error("level_summary: genus is not a nonnegative integer");
  out.genus = genus_from_chi.get_num();
  return out;
}

long enumerate_cusps(long m) {
  if (m < 3 || m > 12)
    throw std::invalid_argument("enumerate_cusps: supported range is 3 <= m <= 12");
  long primitive = 0;
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      if (std::gcd(std::gcd(a, b), m) == 1) ++primitive;
    }
  // (a, b) and (-a, -b) give the same cusp; for m >= 3 no primitive vector is
  // fixed by negation.
  return primitive / 2;
}

} // namespace modcurve::levels
