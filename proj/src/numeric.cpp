#include "modcurve/numeric.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace modcurve {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r{Integer(text)};
      return r;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r;
    r = Rational(num) / Rational(den);
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

namespace {

// Reads a signed decimal number starting at pos; advances pos.
double read_real(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = 0;
  while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '.')) {
    ++pos;
    ++digits;
  }
  // exponent part
  if (digits > 0 && pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    size_t epos = pos + 1;
    if (epos < s.size() && (s[epos] == '+' || s[epos] == '-')) ++epos;
    size_t edigits = 0;
    while (epos < s.size() && std::isdigit((unsigned char)s[epos])) {
      ++epos;
      ++edigits;
    }
    if (edigits > 0) pos = epos;
  }
  if (digits == 0) throw std::invalid_argument("bad complex literal: '" + s + "'");
  return std::stod(s.substr(start, pos - start));
}

} // namespace

Complex complex_from_string(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  // pure imaginary unit shorthand: i, +i, -i
  if (s == "i" || s == "+i") return Complex(0, 1);
  if (s == "-i") return Complex(0, -1);

  size_t pos = 0;
  // "bi" with no real part, e.g. "2i", "-0.5i"
  double first = read_real(s, pos);
  if (pos == s.size()) return Complex(first, 0);
  if (s[pos] == 'i' && pos + 1 == s.size()) return Complex(0, first);

  // "a+bi" / "a-bi" / "a+i" / "a-i"
  if (s[pos] != '+' && s[pos] != '-')
    throw std::invalid_argument("bad complex literal: '" + raw + "'");
  double second;
  if ((s.substr(pos) == "+i") || (s.substr(pos) == "-i")) {
    second = (s[pos] == '+') ? 1.0 : -1.0;
    pos = s.size() - 1;
  } else {
    second = read_real(s, pos);
  }
  if (pos + 1 != s.size() || s[pos] != 'i')
    throw std::invalid_argument("bad complex literal: '" + raw + "'");
  return Complex(first, second);
}

std::string complex_to_string(const Complex& z, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << z.real();
  if (z.imag() >= 0 || std::isnan(z.imag()))
    os << "+" << z.imag() << "i";
  else
    os << "-" << -z.imag() << "i";
  return os.str();
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("factorize: need a positive integer");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer m = n;
  Integer p = 2;
  while (p * p <= m) {
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

} // namespace modcurve
