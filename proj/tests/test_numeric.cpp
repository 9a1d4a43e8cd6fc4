#include "modcurve/numeric.hpp"

#include <doctest.h>

using namespace modcurve;

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-28/1") == Rational(-28));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_from_string("-6/4") == Rational(-3, 2));
  CHECK(rational_to_string(Rational(-28)) == "-28/1");
  CHECK(rational_to_string(frac(5, 10)) == "1/2");
  CHECK(frac(3, -6) == Rational(-1, 2)); // canonical sign handling
  CHECK_THROWS_AS(frac(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("complex literal parsing") {
  CHECK(complex_from_string("0+5i") == Complex(0, 5));
  CHECK(complex_from_string("1.5-2i") == Complex(1.5, -2));
  CHECK(complex_from_string("2i") == Complex(0, 2));
  CHECK(complex_from_string("-0.25i") == Complex(0, -0.25));
  CHECK(complex_from_string("3") == Complex(3, 0));
  CHECK(complex_from_string("i") == Complex(0, 1));
  CHECK(complex_from_string("-i") == Complex(0, -1));
  CHECK(complex_from_string("0.137+0.019i") == Complex(0.137, 0.019));
  CHECK(complex_from_string("1e-3+2e2i") == Complex(0.001, 200));
  CHECK_THROWS_AS(complex_from_string("1+2j"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_string("1+"), std::invalid_argument);
}

TEST_CASE("factorization") {
  auto f = factorize(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned>(Integer(2), 3u));
  CHECK(f[1] == std::pair<Integer, unsigned>(Integer(3), 2u));
  CHECK(f[2] == std::pair<Integer, unsigned>(Integer(5), 1u));
  CHECK(factorize(Integer(1)).empty());
  CHECK(factorize(Integer(97)).size() == 1);
  CHECK_THROWS_AS(factorize(Integer(0)), std::invalid_argument);
}

TEST_CASE("integer and rational powers") {
  CHECK(int_pow(Integer(3), 5) == 243);
  CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rat_pow(Rational(5), 0) == 1);
}
