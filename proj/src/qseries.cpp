#include "modcurve/qseries.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>

namespace modcurve::qseries {

LaurentSeriesQ::LaurentSeriesQ(long lead, std::vector<Rational> coeffs)
    : lead_(lead), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentSeriesQ::normalize() {
  size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
    lead_ += (long)skip;
  }
}

LaurentSeriesQ LaurentSeriesQ::zero(long prec) { return LaurentSeriesQ(prec, {}); }

LaurentSeriesQ LaurentSeriesQ::one(long prec) {
  if (prec <= 0) return zero(prec);
  std::vector<Rational> c((size_t)prec, Rational(0));
  c[0] = 1;
  return LaurentSeriesQ(0, std::move(c));
}

Rational LaurentSeriesQ::coeff(long e) const {
  if (e >= prec())
    throw std::invalid_argument("LaurentSeriesQ::coeff: exponent beyond precision");
  if (e < lead_) return Rational(0);
  return coeffs_[(size_t)(e - lead_)];
}

LaurentSeriesQ LaurentSeriesQ::truncated(long new_prec) const {
  if (new_prec > prec())
    throw std::invalid_argument("LaurentSeriesQ::truncated: cannot extend precision");
  if (new_prec <= lead_) return zero(new_prec);
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (size_t)(new_prec - lead_));
  return LaurentSeriesQ(lead_, std::move(c));
}

std::string LaurentSeriesQ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long e = lead_; e < prec(); ++e) {
    const Rational& c = coeff(e);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mags =
        mag.get_den() == 1 ? mag.get_num().get_str() : rational_to_string(mag);
    if (e == 0) {
      os << mags;
    } else {
      if (mag != 1) os << mags << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << prec() << ")";
  return os.str();
}

LaurentSeriesQ series_add(const LaurentSeriesQ& f, const LaurentSeriesQ& g) {
  const long prec = std::min(f.prec(), g.prec());
  const long lead = std::min(std::min(f.lead(), g.lead()), prec);
  std::vector<Rational> c((size_t)(prec - lead), Rational(0));
  for (long e = lead; e < prec; ++e) {
    Rational v(0);
    if (e < f.prec()) v += f.coeff(e);
    if (e < g.prec()) v += g.coeff(e);
    c[(size_t)(e - lead)] = v;
  }
  return LaurentSeriesQ(lead, std::move(c));
}

LaurentSeriesQ series_sub(const LaurentSeriesQ& f, const LaurentSeriesQ& g) {
  return series_add(f, series_scale(Rational(-1), g));
}

LaurentSeriesQ series_scale(const Rational& s, const LaurentSeriesQ& f) {
  if (s == 0) return LaurentSeriesQ::zero(f.prec());
  std::vector<Rational> c = f.coeffs();
  for (auto& x : c) x *= s;
  return LaurentSeriesQ(f.lead(), std::move(c));
}

LaurentSeriesQ series_mul(const LaurentSeriesQ& f, const LaurentSeriesQ& g) {
  // Knowing f mod O(q^pf) and g mod O(q^pg) determines the product modulo
  // O(q^min(lf+pg, lg+pf)).
  const long prec = std::min(f.lead() + g.prec(), g.lead() + f.prec());
  const long lead = f.lead() + g.lead();
  if (f.is_zero() || g.is_zero() || lead >= prec) return LaurentSeriesQ::zero(prec);
  std::vector<Rational> c((size_t)(prec - lead), Rational(0));
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  for (size_t i = 0; i < fc.size() && i < c.size(); ++i) {
    if (fc[i] == 0) continue;
    for (size_t j = 0; j < gc.size() && i + j < c.size(); ++j) {
      if (gc[j] == 0) continue;
      c[i + j] += fc[i] * gc[j];
    }
  }
  return LaurentSeriesQ(lead, std::move(c));
}

LaurentSeriesQ series_inv(const LaurentSeriesQ& f) {
  if (f.is_zero()) throw std::invalid_argument("series_inv: cannot invert the zero series");
  const auto& fc = f.coeffs();
  const size_t n = fc.size();
  std::vector<Rational> b(n, Rational(0));
  b[0] = 1 / fc[0];
  for (size_t k = 1; k < n; ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j) acc += fc[j] * b[k - j];
    b[k] = -acc / fc[0];
  }
  return LaurentSeriesQ(-f.lead(), std::move(b));
}

LaurentSeriesQ series_pow(const LaurentSeriesQ& f, long e) {
  if (e < 0) return series_pow(series_inv(f), -e);
  if (e == 0) return LaurentSeriesQ::one(f.prec() - f.lead());
  LaurentSeriesQ acc = f;
  for (long i = 1; i < e; ++i) acc = series_mul(acc, f);
  return acc;
}

bool series_agree(const LaurentSeriesQ& f, const LaurentSeriesQ& g) {
  const long prec = std::min(f.prec(), g.prec());
  const long lo = std::min(f.lead(), g.lead());
  for (long e = lo; e < prec; ++e)
    if (f.coeff(e) != g.coeff(e)) return false;
  return true;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: index must be nonnegative");
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while ((int)cache.size() <= n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
    const int m = (int)cache.size();
    Rational acc(0);
    Integer binom = 1; // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    // binom is now C(m+1, m) = m+1
    cache.push_back(-acc / Rational(binom));
  }
  return cache[n];
}

Integer sigma(int k, const Integer& n) {
  if (k < 0) throw std::invalid_argument("sigma: power must be nonnegative");
  if (n <= 0) throw std::invalid_argument("sigma: argument must be a positive integer");
  Integer total = 0;
  Integer d = 1;
  for (; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += int_pow(d, (unsigned long)k);
    Integer e = n / d;
    if (e != d) total += int_pow(e, (unsigned long)k);
  }
  return total;
}

LaurentSeriesQ eisenstein_normalized(int weight, long terms) {
  if (weight < 4 || weight % 2 != 0)
    throw std::invalid_argument("eisenstein_normalized: weight must be even and >= 4");
  if (terms < 1) throw std::invalid_argument("eisenstein_normalized: need at least one term");
  // E_w = 1 - (2w / B_w) sum_n sigma_{w-1}(n) q^n
  const Rational factor = Rational(-2 * weight) / bernoulli(weight);
  std::vector<Rational> c((size_t)terms, Rational(0));
  c[0] = 1;
  for (long n = 1; n < terms; ++n) c[(size_t)n] = factor * Rational(sigma(weight - 1, n));
  return LaurentSeriesQ(0, std::move(c));
}

LaurentSeriesQ delta_normalized(long terms) {
  if (terms < 1) throw std::invalid_argument("delta_normalized: need at least one term");

  // Product route: q * prod_{n>=1} (1-q^n)^24 mod q^terms.
  const long plen = terms - 1; // coefficients of prod (1-q^n)^24 mod q^(terms-1)
  std::vector<Rational> prod;
  if (plen > 0) {
    std::vector<Integer> p((size_t)plen, 0);
    p[0] = 1;
    for (long n = 1; n < plen; ++n)
      for (int rep = 0; rep < 24; ++rep)
        for (long i = plen - 1; i >= n; --i) p[(size_t)i] -= p[(size_t)(i - n)];
    prod.reserve((size_t)plen);
    for (auto& x : p) prod.emplace_back(x);
  }
  LaurentSeriesQ from_product(1, std::move(prod));

  // Eisenstein route: (E4^3 - E6^2)/1728.
  const LaurentSeriesQ e4 = eisenstein_normalized(4, terms);
  const LaurentSeriesQ e6 = eisenstein_normalized(6, terms);
  LaurentSeriesQ from_eis = series_scale(
      Rational(1, 1728), series_sub(series_pow(e4, 3), series_pow(e6, 2)));

  if (!series_agree(from_product, from_eis))
    throw std::logic_error("delta_normalized: product and Eisenstein expansions disagree");
  return from_product;
}

LaurentSeriesQ j_series(long terms) {
  if (terms < 1) throw std::invalid_argument("j_series: need at least one term");
  const long work = terms + 2;
  const LaurentSeriesQ e4 = eisenstein_normalized(4, work);
  const LaurentSeriesQ delta = delta_normalized(work);
  LaurentSeriesQ j = series_mul(series_pow(e4, 3), series_inv(delta));
  return j.truncated(terms);
}

std::string series_to_json(const LaurentSeriesQ& f) {
  nlohmann::json out;
  out["lead"] = f.lead();
  out["prec"] = f.prec();
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& c : f.coeffs()) arr.push_back(rational_to_string(c));
  out["coeffs"] = std::move(arr);
  return out.dump();
}

LaurentSeriesQ series_from_json(const std::string& text) {
  nlohmann::json in = nlohmann::json::parse(text);
  if (!in.contains("lead") || !in.contains("prec") || !in.contains("coeffs"))
    throw std::invalid_argument("series_from_json: missing lead/prec/coeffs");
  const long lead = in["lead"].get<long>();
  const long prec = in["prec"].get<long>();
  std::vector<Rational> coeffs;
  for (const auto& item : in["coeffs"]) coeffs.push_back(rational_from_string(item.get<std::string>()));
  if (lead + (long)coeffs.size() != prec)
    throw std::invalid_argument("series_from_json: prec does not match lead + #coeffs");
  return LaurentSeriesQ(lead, std::move(coeffs));
}

} // namespace modcurve::qseries
