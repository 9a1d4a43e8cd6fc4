#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and rationals
// (GMP-backed) plus the small parsing/formatting helpers shared by the
// library and the CLI.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcurve {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

// Thrown when an iterative numeric method fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Canonical fraction num/den. The two-argument mpq constructor does not
// reduce and non-canonical values break mpq arithmetic, so every fraction
// built from runtime values goes through here.
inline Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
    Rational inv = 1 / base;
    return rat_pow(inv, -exp);
  }
  Rational num(int_pow(base.get_num(), (unsigned long)exp));
  Rational den(int_pow(base.get_den(), (unsigned long)exp));
  return num / den;
}

// "p/q" with the denominator always written, so rationals are never confused
// with decimals in JSON payloads.
inline std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p", "p/q" and optional leading sign; rejects anything else.
Rational rational_from_string(const std::string& text);

// Complex literals of the form "a+bi" / "a-bi" / "bi" / "a" / "i".
Complex complex_from_string(const std::string& text);
std::string complex_to_string(const Complex& z, int precision = 12);

// Prime factorization by trial division; adequate for the level/group-order
// computations this library targets.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

} // namespace modcurve
