#include "modcurve/sl2z.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace modcurve::sl2z {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr long kMaxReductionSteps = 1000000;
} // namespace

UnimodularMatrix::UnimodularMatrix(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() != 1)
    throw std::invalid_argument("UnimodularMatrix: determinant must be 1, got " + det().get_str());
}

UnimodularMatrix UnimodularMatrix::negated() const {
  UnimodularMatrix r;
  r.a = -a;
  r.b = -b;
  r.c = -c;
  r.d = -d;
  return r;
}

std::string UnimodularMatrix::to_string() const {
  std::ostringstream os;
  os << "[" << a.get_str() << " " << b.get_str() << "; " << c.get_str() << " " << d.get_str()
     << "]";
  return os.str();
}

const UnimodularMatrix& identity() {
  static const UnimodularMatrix m;
  return m;
}
const UnimodularMatrix& gen_S() {
  static const UnimodularMatrix m(0, -1, 1, 0);
  return m;
}
const UnimodularMatrix& gen_T() {
  static const UnimodularMatrix m(1, 1, 0, 1);
  return m;
}
const UnimodularMatrix& gen_T_hat() {
  static const UnimodularMatrix m(1, 0, 1, 1);
  return m;
}
const UnimodularMatrix& gen_U() {
  static const UnimodularMatrix m(0, -1, 1, 1);
  return m;
}

UnimodularMatrix compose(const UnimodularMatrix& g, const UnimodularMatrix& h) {
  UnimodularMatrix r;
  r.a = g.a * h.a + g.b * h.c;
  r.b = g.a * h.b + g.b * h.d;
  r.c = g.c * h.a + g.d * h.c;
  r.d = g.c * h.b + g.d * h.d;
  return r;
}

std::array<Integer, 4> reduce_mod(const UnimodularMatrix& g, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("reduce_mod: modulus must be positive");
  auto red = [&](const Integer& x) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
  };
  return {red(g.a), red(g.b), red(g.c), red(g.d)};
}

TauPoint::TauPoint(Complex v) : value(v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::invalid_argument("TauPoint: components must be finite");
  if (!(v.imag() > 0)) throw std::invalid_argument("TauPoint: imaginary part must be positive");
}

TauPoint act(const UnimodularMatrix& g, const TauPoint& tau) {
  const Complex t = tau.value;
  const Complex num = g.a.get_d() * t + g.b.get_d();
  const Complex den = g.c.get_d() * t + g.d.get_d();
  return TauPoint(num / den);
}

ReductionResult reduce_to_fundamental_domain(const TauPoint& tau) {
  Complex t = tau.value;
  UnimodularMatrix gamma;

  for (long step = 0;; ++step) {
    if (step > kMaxReductionSteps)
      throw ConvergenceError("reduce_to_fundamental_domain: no convergence (input too close to the real axis?)");
    const double shift = std::floor(t.real() + 0.5); // recenter Re into [-1/2, 1/2)
    if (shift != 0) {
      t -= shift;
      // gamma <- T^{-shift} * gamma
      UnimodularMatrix ts(1, Integer(-shift), 0, 1);
      gamma = compose(ts, gamma);
    }
    if (std::norm(t) < 1.0) {
      t = -1.0 / t;
      gamma = compose(gen_S(), gamma);
    } else {
      break;
    }
  }

  // Boundary conventions: Re in [-1/2, 1/2); Re <= 0 on the unit arc.
  if (t.real() >= 0.5 - kBoundaryTol) {
    t -= 1.0;
    gamma = compose(UnimodularMatrix(1, -1, 0, 1), gamma);
  }
  if (std::abs(std::abs(t) - 1.0) <= kBoundaryTol && t.real() > 0) {
    t = -1.0 / t;
    gamma = compose(gen_S(), gamma);
  }
  return ReductionResult{TauPoint(t), gamma};
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::S: return "S";
    case Generator::SInv: return "S^-1";
    case Generator::T: return "T";
    case Generator::TInv: return "T^-1";
  }
  return "?";
}

const UnimodularMatrix& generator_matrix(Generator g) {
  static const UnimodularMatrix s_inv = gen_S().inverse();
  static const UnimodularMatrix t_inv = gen_T().inverse();
  switch (g) {
    case Generator::S: return gen_S();
    case Generator::SInv: return s_inv;
    case Generator::T: return gen_T();
    case Generator::TInv: return t_inv;
  }
  return identity();
}

UnimodularMatrix evaluate(const GeneratorWord& word) {
  UnimodularMatrix p;
  for (Generator g : word.tokens) p = compose(p, generator_matrix(g));
  return p;
}

UnimodularMatrix reconstruct(const GeneratorWord& word) {
  UnimodularMatrix p = evaluate(word);
  return word.sign == 1 ? p : p.negated();
}

namespace {

// Exact point of Q(i) in the upper half plane.
struct GaussianRational {
  Rational re, im;
};

Integer round_nearest(const Rational& x) {
  // floor(x + 1/2): ties go up, so Re lands in [-1/2, 1/2)
  Rational y = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
  return q;
}

} // namespace

GeneratorWord word_decompose(const UnimodularMatrix& g) {
  // Reduce g * (2i) back to 2i, recording the moves. The stabilizer of 2i is
  // {+-I}, so the recorded word w satisfies w g = +-I.
  const Integer den = g.d * g.d + 4 * g.c * g.c;
  GaussianRational t;
  t.re = Rational(g.b * g.d + 4 * g.a * g.c) / Rational(den);
  t.im = Rational(2) / Rational(den);

  std::vector<Generator> moves; // in order of application
  for (long step = 0;; ++step) {
    if (step > kMaxReductionSteps) throw ConvergenceError("word_decompose: reduction did not terminate");
    const Integer r = round_nearest(t.re);
    if (r != 0) {
      t.re -= Rational(r);
      Generator tok = (r > 0) ? Generator::TInv : Generator::T;
      const Integer rabs = abs(r);
      for (Integer k = 0; k < rabs; ++k) moves.push_back(tok);
    }
    Rational norm = t.re * t.re + t.im * t.im;
    if (norm < 1) {
      // tau -> -1/tau
      Rational nre = -t.re / norm;
      Rational nim = t.im / norm;
      t.re = nre;
      t.im = nim;
      moves.push_back(Generator::S);
    } else {
      break;
    }
  }

  // With w = m_k ... m_1 (moves applied left), w g = +-I, so
  // g = +- m_1^-1 m_2^-1 ... m_k^-1: invert each move, keeping the order.
  GeneratorWord word;
  word.tokens.reserve(moves.size());
  for (auto it = moves.begin(); it != moves.end(); ++it) {
    switch (*it) {
      case Generator::S: word.tokens.push_back(Generator::SInv); break;
      case Generator::SInv: word.tokens.push_back(Generator::S); break;
      case Generator::T: word.tokens.push_back(Generator::TInv); break;
      case Generator::TInv: word.tokens.push_back(Generator::T); break;
    }
  }

  UnimodularMatrix p = evaluate(word);
  if (p == g) {
    word.sign = 1;
  } else if (p.negated() == g) {
    word.sign = -1;
    // S^-1 = -S, so flipping one S-token absorbs the sign without
    // lengthening the word.
    for (auto& tok : word.tokens) {
      if (tok == Generator::S) {
        tok = Generator::SInv;
        word.sign = 1;
        break;
      }
      if (tok == Generator::SInv) {
        tok = Generator::S;
        word.sign = 1;
        break;
      }
    }
  } else {
    throw std::logic_error("word_decompose: reassembled word does not match input");
  }
  return word;
}

int stabilizer_order(const TauPoint& tau) {
  constexpr double tol = 1e-9;
  const Complex t = reduce_to_fundamental_domain(tau).tau.value;
  const Complex rho(-0.5, std::sqrt(3.0) / 2.0);
  if (std::abs(t - Complex(0, 1)) <= tol) return 4;
  if (std::abs(t - rho) <= tol) return 6;
  return 2;
}

Integer sl2_mod_order(const Integer& m) {
  if (m <= 0) throw std::invalid_argument("sl2_mod_order: m must be a positive integer");
  if (m == 1) return 1;
  Integer r = m * m * m;
  for (const auto& [p, e] : factorize(m)) {
    (void)e;
    r /= p * p;
    r *= p * p - 1;
  }
  return r;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> mat) {
  const size_t rows = mat.size();
  const size_t cols = rows ? mat[0].size() : 0;
  for (const auto& row : mat)
    if (row.size() != cols) throw std::invalid_argument("smith_diagonal: ragged matrix");

  const size_t bound = std::min(rows, cols);
  std::vector<Integer> diag;

  for (size_t s = 0; s < bound; ++s) {
    // Locate the entry of least nonzero magnitude in the trailing block.
    bool found = false;
    size_t pr = s, pc = s;
    Integer best;
    for (size_t i = s; i < rows; ++i)
      for (size_t j = s; j < cols; ++j) {
        if (mat[i][j] == 0) continue;
        Integer v = abs(mat[i][j]);
        if (!found || v < best) {
          found = true;
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;

    std::swap(mat[s], mat[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(mat[i][s], mat[i][pc]);

    for (bool dirty = true; dirty;) {
      dirty = false;
      // Clear the pivot column.
      for (size_t i = s + 1; i < rows; ++i) {
        if (mat[i][s] == 0) continue;
        Integer q = mat[i][s] / mat[s][s];
        for (size_t j = s; j < cols; ++j) mat[i][j] -= q * mat[s][j];
        if (mat[i][s] != 0) {
          std::swap(mat[s], mat[i]); // smaller remainder becomes the pivot
          dirty = true;
        }
      }
      // Clear the pivot row.
      for (size_t j = s + 1; j < cols; ++j) {
        if (mat[s][j] == 0) continue;
        Integer q = mat[s][j] / mat[s][s];
        for (size_t i = s; i < rows; ++i) mat[i][j] -= q * mat[i][s];
        if (mat[s][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(mat[i][s], mat[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Enforce divisibility: pivot must divide the trailing block.
      for (size_t i = s + 1; i < rows && !dirty; ++i)
        for (size_t j = s + 1; j < cols && !dirty; ++j)
          if (mat[i][j] % mat[s][s] != 0) {
            for (size_t k = s; k < cols; ++k) mat[s][k] += mat[i][k];
            dirty = true;
          }
    }
    diag.push_back(abs(mat[s][s]));
  }
  return diag;
}

std::vector<Integer> abelianize(const AbelianPresentation& p) {
  if (p.num_generators < 0) throw std::invalid_argument("abelianize: negative generator count");
  for (const auto& rel : p.relations)
    if ((int)rel.size() != p.num_generators)
      throw std::invalid_argument("abelianize: relation length does not match generator count");

  std::vector<Integer> diag = smith_diagonal(p.relations);
  std::vector<Integer> factors;
  size_t rank = 0;
  for (const Integer& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) factors.push_back(d);
  }
  for (int i = 0; i < p.num_generators - (int)rank; ++i) factors.push_back(0);
  return factors;
}

} // namespace modcurve::sl2z
