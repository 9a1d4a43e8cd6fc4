#include "modcurve/analytic.hpp"

#include "modcurve/qseries.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

using namespace modcurve;
using namespace modcurve::analytic;
using sl2z::TauPoint;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kRho(-0.5, std::sqrt(3.0) / 2.0);

// Random tau in the fundamental domain, keeping clear of the corner orbits
// when asked.
Complex random_tau_in_F(std::mt19937& rng, bool avoid_corners = false) {
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.0, 1.0);
  for (;;) {
    const Complex t(re(rng), 0.9 + 1.4 * im(rng));
    if (std::abs(t) < 1.02) continue;
    if (avoid_corners &&
        (std::abs(t - Complex(0, 1)) < 0.15 || std::abs(t - kRho) < 0.15 ||
         std::abs(t - (kRho + 1.0)) < 0.15))
      continue;
    return t;
  }
}

} // namespace

TEST_CASE("zeta at even integers") {
  CHECK(zeta_even(2) == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
  CHECK(zeta_even(4) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-14));
  CHECK(zeta_even(6) == doctest::Approx(std::pow(kPi, 6) / 945).epsilon(1e-14));
  CHECK_THROWS_AS(zeta_even(3), std::invalid_argument);
}

TEST_CASE("lattice sum vs q-series: the two routes agree") {
  // G4(i), radius 200: oracle agreement within 1e-6 relative
  const TauPoint i{Complex(0, 1)};
  const Complex by_sum = eisenstein_lattice_sum(4, i, 200);
  const auto mv = eval_modular(i);
  const Complex by_series = 2.0 * zeta_even(4) * mv.E4;
  CHECK(std::abs(by_sum - by_series) < 1e-6 * std::abs(by_series));
}

TEST_CASE("lattice sum scaling law S_k(u L) = u^-k S_k(L)") {
  const Complex u(2, 0);
  const lattice::FramedLattice L(Complex(1, 0), Complex(0, 1));
  const lattice::FramedLattice uL(u * Complex(1, 0), u * Complex(0, 1));
  for (int k : {4, 6}) {
    const Complex lhs = eisenstein_lattice_sum(k, uL, 200);
    const Complex rhs = std::pow(u, -k) * eisenstein_lattice_sum(k, L, 200);
    CHECK(std::abs(lhs - rhs) < 1e-8 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("lattice sum rejects odd and small k") {
  const TauPoint i{Complex(0, 1)};
  CHECK_THROWS_AS(eisenstein_lattice_sum(3, i, 50), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_lattice_sum(2, i, 50), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_lattice_sum(4, i, 0), std::invalid_argument);
}

TEST_CASE("eval_modular special values") {
  CHECK(std::abs(eval_modular(TauPoint{Complex(0, 1)}).j - 1728.0) < 1e-6);
  CHECK(std::abs(eval_modular(TauPoint{kRho}).j) < 1e-6);

  // toward the cusp: g2 -> (4/3) pi^4, g3 -> (8/27) pi^6
  const auto far = eval_modular(TauPoint{Complex(0.3, 40)});
  CHECK(std::abs(far.g2 - 4.0 / 3.0 * std::pow(kPi, 4)) < 1e-9);
  CHECK(std::abs(far.g3 - 8.0 / 27.0 * std::pow(kPi, 6)) < 1e-9);
}

TEST_CASE("modular invariance and the weight-k factor") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex tau = random_tau_in_F(rng);
    // random gamma from small words
    sl2z::UnimodularMatrix g;
    for (int k = 0; k < 6; ++k) {
      const int pick = small(rng) & 3;
      g = sl2z::compose(g, sl2z::generator_matrix(static_cast<sl2z::Generator>(pick)));
    }
    const TauPoint t{tau};
    const TauPoint gt = sl2z::act(g, t);
    const auto v1 = eval_modular(t);
    const auto v2 = eval_modular(gt);
    CHECK(std::abs(v2.j - v1.j) < 1e-8 * (1 + std::abs(v1.j)));
    const Complex cd = g.c.get_d() * tau + g.d.get_d();
    CHECK(std::abs(v2.E4 - std::pow(cd, 4) * v1.E4) < 1e-7 * std::abs(std::pow(cd, 4) * v1.E4));
    CHECK(std::abs(v2.E6 - std::pow(cd, 6) * v1.E6) < 1e-7 * std::abs(std::pow(cd, 6) * v1.E6));
  }
}

TEST_CASE("delta has no zeros on the sampled fundamental domain") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto v = eval_modular(TauPoint{random_tau_in_F(rng)});
    const double scale = std::pow(std::abs(v.g2), 3) + std::pow(std::abs(v.g3), 2) + 1.0;
    CHECK(std::abs(v.delta) > 1e-12 * scale);
  }
}

TEST_CASE("oracle agreement at 50 random points") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(0.5, 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    const TauPoint t{Complex(re(rng), im(rng))};
    const auto mv = eval_modular(t);
    for (int k : {4, 6}) {
      const Complex sum = eisenstein_lattice_sum(k, t, 200);
      const Complex ser = 2.0 * zeta_even(k) * (k == 4 ? mv.E4 : mv.E6);
      CHECK(std::abs(sum - ser) < 1e-5 * (1 + std::abs(ser)));
    }
  }
}

TEST_CASE("wp is even and satisfies the differential equation") {
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex tau = random_tau_in_F(rng);
    const TauPoint t{tau};
    const Complex z = unit(rng) + unit(rng) * tau;
    const auto w = wp(t, z);
    const auto wneg = wp(t, -z);
    CHECK(std::abs(w.p - wneg.p) < 1e-9 * (1 + std::abs(w.p)));

    const auto mv = eval_modular(t);
    const Complex residual =
        w.p_prime * w.p_prime - (4.0 * w.p * w.p * w.p - mv.g2 * w.p - mv.g3);
    CHECK(std::abs(residual) < 1e-8 * (1 + std::pow(std::abs(w.p), 3)));
  }
}

TEST_CASE("wp scaling under u Lambda") {
  const Complex u(1, 1);
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> unit(-0.45, 0.45);
  for (int trial = 0; trial < 25; ++trial) {
    const Complex tau = random_tau_in_F(rng);
    const Complex z = unit(rng) + unit(rng) * tau;
    const lattice::FramedLattice L(Complex(1, 0), tau);
    const lattice::FramedLattice uL(u, u * tau);
    const auto base = wp(L, z);
    const auto scaled = wp(uL, u * z);
    CHECK(std::abs(scaled.p - base.p / (u * u)) < 1e-7 * (1 + std::abs(base.p)));
    CHECK(std::abs(scaled.p_prime - base.p_prime / (u * u * u)) < 1e-7 * (1 + std::abs(base.p_prime)));
  }
}

TEST_CASE("wp series and lattice-sum branches agree on the overlap annulus") {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> mag(0.35, 0.44), ang(0, 2 * kPi);
  for (int trial = 0; trial < 25; ++trial) {
    const Complex tau = random_tau_in_F(rng);
    const lattice::FramedLattice L(Complex(1, 0), tau);
    const Complex z = std::polar(mag(rng), ang(rng));
    const auto a = wp_via_series(L, z);
    const auto b = wp_via_lattice_sum(L, z);
    CHECK(std::abs(a.p - b.p) < 1e-7 * (1 + std::abs(a.p)));
    CHECK(std::abs(a.p_prime - b.p_prime) < 1e-7 * (1 + std::abs(a.p_prime)));
  }
}

TEST_CASE("wp pole and argument validation") {
  const TauPoint i{Complex(0, 1)};
  CHECK_THROWS_AS(wp(i, Complex(0, 0)), std::domain_error);
  CHECK_THROWS_AS(wp(i, Complex(3, 2)), std::domain_error); // 3 + 2i is a lattice point
  CHECK_THROWS_AS(wp(i, Complex(std::nan(""), 0)), std::invalid_argument);
}

TEST_CASE("embedding lands on the cubic") {
  std::mt19937 rng(79);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex tau = random_tau_in_F(rng);
    const TauPoint t{tau};
    Complex z = unit(rng) + unit(rng) * tau;
    if (std::abs(z) < 1e-3) z += 0.25;
    const auto P = embed(t, z);
    const auto mv = eval_modular(t);
    const Complex residual = P.z * P.y * P.y - 4.0 * P.x * P.x * P.x +
                             mv.g2 * P.x * P.z * P.z + mv.g3 * P.z * P.z * P.z;
    const double scale = std::pow(std::abs(P.x), 3) + std::abs(P.y * P.y) + 1.0;
    CHECK(std::abs(residual) < 1e-8 * scale);
  }
}

TEST_CASE("embedding maps lattice points to [0,1,0]") {
  const TauPoint t{Complex(0.25, 1.3)};
  const auto P = embed(t, Complex(0, 0));
  CHECK(P.x == Complex(0, 0));
  CHECK(P.y == Complex(1, 0));
  CHECK(P.z == Complex(0, 0));
  const auto Q = embed(t, Complex(2, 0) + Complex(0.25, 1.3) * 3.0);
  CHECK(Q.y == Complex(1, 0));
  CHECK(Q.z == Complex(0, 0));
}

TEST_CASE("central differences of wp reproduce wp-prime") {
  const TauPoint t{Complex(0.13, 1.21)};
  std::mt19937 rng(83);
  std::uniform_real_distribution<double> unit(-0.4, 0.4);
  const double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    Complex z = unit(rng) + unit(rng) * t.value;
    if (std::abs(z) < 0.1) z += 0.3;
    const auto w = wp(t, z);
    const Complex fd = (wp(t, z + h).p - wp(t, z - h).p) / (2 * h);
    CHECK(std::abs(fd - w.p_prime) < 1e-5 * (1 + std::abs(w.p_prime)));
  }
}

TEST_CASE("invert_j special points and round trips") {
  CHECK(std::abs(invert_j(Complex(1728, 0)).value - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(invert_j(Complex(0, 0)).value - kRho) < 1e-12);

  std::mt19937 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex tau0 = random_tau_in_F(rng, /*avoid_corners=*/true);
    const Complex c = eval_modular(TauPoint{tau0}).j;
    const Complex back = invert_j(c).value;
    CHECK(std::abs(back - tau0) < 1e-7 * (1 + std::abs(tau0)));
  }

  // the cusp expansion path for large values, of either sign
  for (const Complex big : {Complex(7.3e8, -2.1e8), Complex(-1e6, 0), Complex(-4.1e4, 3e3)}) {
    const Complex tb = invert_j(big).value;
    CHECK(std::abs(eval_modular(TauPoint{tb}).j - big) < 1e-8 * (1 + std::abs(big)));
  }

  CHECK_THROWS_AS(invert_j(Complex(std::nan(""), 0)), std::invalid_argument);
}

TEST_CASE("analytic delta matches (2 pi)^12 times the exact expansion") {
  // Ties the pi-power constants in g2, g3 to the normalized exact series.
  const auto series = qseries::delta_normalized(40);
  for (const Complex tau : {Complex(0.3, 1.2), Complex(-0.41, 0.93), Complex(0.05, 2.2)}) {
    const auto mv = eval_modular(sl2z::TauPoint{tau});
    const Complex q = std::exp(Complex(0, 2 * kPi) * tau);
    Complex sum(0, 0);
    for (long e = series.prec() - 1; e >= 1; --e)
      sum = sum * q + series.coeff(e).get_d();
    sum *= q;
    const Complex expected = std::pow(2 * kPi, 12) * sum;
    CHECK(std::abs(mv.delta - expected) < 1e-9 * (1 + std::abs(expected)));
  }
}

TEST_CASE("invert_j near the ramification points still meets its residual bound") {
  for (const Complex tau0 : {Complex(0, 1.08), Complex(-0.47, 0.93)}) {
    const Complex c = eval_modular(sl2z::TauPoint{tau0}).j;
    const Complex t = invert_j(c).value;
    CHECK(std::abs(eval_modular(sl2z::TauPoint{t}).j - c) < 1e-8 * (1 + std::abs(c)));
  }
}

TEST_CASE("concurrent evaluation is consistent") {
  // Pure functions with internal caches: racing first use across threads
  // must produce identical values.
  const Complex tau(0.21, 1.37);
  const auto reference = eval_modular(sl2z::TauPoint{tau});
  const auto wp_ref = wp(sl2z::TauPoint{tau}, Complex(0.3, 0.2));
  std::vector<std::thread> workers;
  std::vector<int> ok(4, 0);
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] {
      const auto mv = eval_modular(sl2z::TauPoint{tau});
      const auto w = wp(sl2z::TauPoint{tau}, Complex(0.3, 0.2));
      const auto b = qseries::bernoulli(40 + 2 * i);
      ok[(size_t)i] = mv.j == reference.j && w.p == wp_ref.p && b == qseries::bernoulli(40 + 2 * i);
    });
  for (auto& t : workers) t.join();
  for (int i = 0; i < 4; ++i) CHECK(ok[(size_t)i] == 1);
}

TEST_CASE("nodal parametrization") {
  // w = -1 hits the branch point (X, Y) = (-2/3, 0)
  const auto p = nodal_param(Complex(-1, 0));
  CHECK(std::abs(p.X - Complex(-2.0 / 3.0, 0)) < 1e-15);
  CHECK(std::abs(p.Y) < 1e-15);

  // w -> 0 approaches the double point [1/3, 0, 1]
  const auto q = nodal_param(Complex(1e-9, 0));
  CHECK(std::abs(q.X - Complex(1.0 / 3.0, 0)) < 1e-8);
  CHECK(std::abs(q.Y) < 1e-8);

  // Y^2 = (4/27)(3X+2)(3X-1)^2 for random w
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> coord(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex w(coord(rng), coord(rng));
    if (std::abs(w - Complex(1, 0)) < 0.05) continue;
    const auto n = nodal_param(w);
    const Complex lhs = n.Y * n.Y;
    const Complex rhs =
        (4.0 / 27.0) * (3.0 * n.X + 2.0) * (3.0 * n.X - 1.0) * (3.0 * n.X - 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + std::abs(lhs) + std::abs(rhs)));
  }

  CHECK_THROWS_AS(nodal_param(Complex(1, 0)), std::domain_error);
}
