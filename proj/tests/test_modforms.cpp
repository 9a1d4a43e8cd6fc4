#include "modcurve/modforms.hpp"

#include <doctest.h>

#include <cmath>

using namespace modcurve;
using namespace modcurve::modforms;
using qseries::LaurentSeriesQ;

TEST_CASE("dimension formula") {
  CHECK(dim_M(0) == 1);
  CHECK(dim_M(2) == 0);
  CHECK(dim_M(4) == 1);
  CHECK(dim_M(6) == 1);
  CHECK(dim_M(12) == 2);
  CHECK(dim_M(14) == 1);
  CHECK(dim_M(7) == 0);
  CHECK(dim_M(-4) == 0);
}

TEST_CASE("monomial bases") {
  using P = std::pair<int, int>;
  const auto b12 = monomial_basis(12);
  REQUIRE(b12.size() == 2);
  CHECK(std::count(b12.begin(), b12.end(), P{3, 0}) == 1);
  CHECK(std::count(b12.begin(), b12.end(), P{0, 2}) == 1);

  const auto b14 = monomial_basis(14);
  REQUIRE(b14.size() == 1);
  CHECK(b14[0] == P{2, 1});

  const auto b4 = monomial_basis(4);
  REQUIRE(b4.size() == 1);
  CHECK(b4[0] == P{1, 0});

  CHECK(monomial_basis(7).empty());
}

TEST_CASE("monomial count equals the dimension for all even weights to 400") {
  for (long w = 0; w <= 400; w += 2) CHECK((long)monomial_basis(w).size() == dim_M(w));
}

TEST_CASE("cusp dimensions and the Delta shift") {
  CHECK(cusp_dim(12) == 1);
  CHECK(cusp_dim(10) == 0);
  CHECK(cusp_dim(26) == dim_M(14));
  CHECK(cusp_dim(0) == 0);
  CHECK(cusp_dim(2) == 0);
  CHECK(cusp_dim(5) == 0);
  for (long w = 12; w <= 400; w += 2) CHECK(cusp_dim(w) == dim_M(w - 12));
}

TEST_CASE("valence formula checker") {
  OrderVector delta_orders;
  delta_orders.nu_infty = 1;
  CHECK(valence_check(12, delta_orders));

  OrderVector g4_orders;
  g4_orders.nu_rho = 1;
  CHECK(valence_check(4, g4_orders));

  OrderVector g6_orders;
  g6_orders.nu_i = 1;
  CHECK(valence_check(6, g6_orders));

  OrderVector wrong;
  wrong.nu_infty = 2;
  CHECK(!valence_check(12, wrong));

  CHECK_THROWS_AS(valence_check(7, delta_orders), std::invalid_argument);
}

TEST_CASE("valence holds for monomials in E4, E6, Delta") {
  for (int alpha = 0; alpha <= 3; ++alpha)
    for (int beta = 0; beta <= 3; ++beta)
      for (int gamma = 0; gamma <= 3; ++gamma) {
        const long w = 4L * alpha + 6L * beta + 12L * gamma;
        if (w == 0) continue;
        OrderVector orders;
        orders.nu_rho = alpha;
        orders.nu_i = beta;
        orders.nu_infty = gamma;
        CHECK(valence_check(w, orders));
      }
}

TEST_CASE("q-expansions of the monomial basis are linearly independent") {
  // exact rank over Q of the coefficient matrix with dim + 5 columns
  for (long w = 4; w <= 60; w += 2) {
    const auto basis = monomial_basis(w);
    const long dim = (long)basis.size();
    if (dim == 0) continue;
    const long cols = dim + 5;
    std::vector<std::vector<Rational>> M;
    for (const auto& [alpha, beta] : basis) {
      const auto series = FormExpression::monomial(alpha, beta).q_expansion(cols);
      std::vector<Rational> row;
      for (long e = 0; e < cols; ++e) row.push_back(series.coeff(e));
      M.push_back(std::move(row));
    }
    // Gaussian elimination over Q
    long rank = 0;
    for (long col = 0; col < cols && rank < dim; ++col) {
      long pivot = -1;
      for (long r = rank; r < dim; ++r)
        if (M[(size_t)r][(size_t)col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(M[(size_t)rank], M[(size_t)pivot]);
      for (long r = rank + 1; r < dim; ++r) {
        if (M[(size_t)r][(size_t)col] == 0) continue;
        const Rational f = M[(size_t)r][(size_t)col] / M[(size_t)rank][(size_t)col];
        for (long cc = col; cc < cols; ++cc)
          M[(size_t)r][(size_t)cc] -= f * M[(size_t)rank][(size_t)cc];
      }
      ++rank;
    }
    CHECK(rank == dim);
  }
}

TEST_CASE("FormExpression arithmetic and homogeneity") {
  auto f = FormExpression::monomial(3, 0);
  CHECK(f.weight() == 12);
  CHECK_THROWS_AS(f.add_term(1, 0, Rational(1)), std::invalid_argument);

  const auto d = FormExpression::delta();
  CHECK(d.weight() == 12);
  CHECK(d.is_cusp_form());
  CHECK(!FormExpression::monomial(3, 0).is_cusp_form());

  // Delta expression expands to the product form
  CHECK(qseries::series_agree(d.q_expansion(40), qseries::delta_normalized(40)));
}

TEST_CASE("petersson: positivity, symmetry, sesquilinearity") {
  const auto delta = FormExpression::delta();
  const Complex norm = petersson(delta, delta);
  CHECK(norm.real() > 0);
  CHECK(std::abs(norm.imag()) < 1e-9 * norm.real());

  // two independent weight-24 cusp forms: Delta E4^3 and Delta E6^2
  FormExpression f; // (E4^6 - E4^3 E6^2)/1728
  f.add_term(6, 0, Rational(1, 1728));
  f.add_term(3, 2, Rational(-1, 1728));
  FormExpression g; // (E4^3 E6^2 - E6^4)/1728
  g.add_term(3, 2, Rational(1, 1728));
  g.add_term(0, 4, Rational(-1, 1728));
  REQUIRE(f.is_cusp_form());
  REQUIRE(g.is_cusp_form());

  const Complex fg = petersson(f, g);
  const Complex gf = petersson(g, f);
  CHECK(std::abs(fg - std::conj(gf)) < 1e-6 * (1 + std::abs(fg)));

  const Complex two_fg = petersson(f.scaled(Rational(2)), g);
  CHECK(std::abs(two_fg - 2.0 * fg) < 1e-9 * (1 + std::abs(two_fg)));

  const Complex ff = petersson(f, f);
  CHECK(ff.real() > 0);
}

TEST_CASE("petersson guards") {
  const auto delta = FormExpression::delta();
  const auto e12 = FormExpression::monomial(3, 0); // not a cusp form
  CHECK_THROWS_AS(petersson(delta, e12), std::domain_error);

  FormExpression w24;
  w24.add_term(6, 0, Rational(1, 1728));
  w24.add_term(3, 2, Rational(-1, 1728));
  CHECK_THROWS_AS(petersson(delta, w24), std::invalid_argument); // weight mismatch

  // no cusp forms below weight 12 anyway; the guard fires on the weight
  const auto e4 = FormExpression::monomial(1, 0);
  CHECK_THROWS_AS(petersson(e4, e4), std::invalid_argument);
}
