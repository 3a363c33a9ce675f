// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>

#include "g2h/numeric.hpp"

using namespace g2h;

TEST_CASE("rational arithmetic reduces") {
  Rational x = Rational(2, 3) + Rational(1, 3);
  x.canonicalize();
  CHECK(x.get_num() == 1);
  CHECK(x.get_den() == 1);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" -7/21 ") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
}

TEST_CASE("padic valuations add under multiplication") {
  PAdic a = PAdic::make(2, 3, 1, 5), b = PAdic::make(2, 1, 1, 5);
  PAdic c = a * b;
  CHECK(c.valuation() == 4);
  CHECK(c.unit() % 32 == 1);
  PAdic d = PAdic::from_rational(Rational(-12, 5), 2, 20);
  CHECK(d.valuation() == 2);
  CHECK((d / PAdic::from_rational(8, 2, 20)).valuation() == -1);
}

TEST_CASE("padic total cancellation is a zero at precision") {
  PAdic a = PAdic::make(3, 0, 1, 4), b = PAdic::make(3, 0, 80, 4);  // 80 = -1 mod 81
  PAdic s = a + b;
  CHECK(s.state() == PAdic::State::zero_at_precision);
  CHECK(s.is_zero());
  CHECK_FALSE(s.is_exact_zero());
  CHECK_THROWS_AS(PAdic::make(3, 0, 1, 4) / s, DivisionByZero);
  PAdic z = PAdic::from_rational(0, 3, 4);
  CHECK(z.is_exact_zero());
}

TEST_CASE("padic agrees with exact rational arithmetic") {
  Rational x(7, 12), y(-20, 9);
  for (std::uint64_t q : {2, 3, 5}) {
    PAdic px = PAdic::from_rational(x, q, 30), py = PAdic::from_rational(y, q, 30);
    CHECK((px * py).valuation() == ord(Rational(x * y), Integer(q)));
    CHECK((px + py).valuation() == ord(Rational(x + y), Integer(q)));
    CHECK((px / py).valuation() == ord(Rational(x / y), Integer(q)));
  }
}

TEST_CASE("log_abs normalisation") {
  CHECK(log_abs(-12, Place::finite_at(2)) == -2);
  CHECK(log_abs(Rational(5, 4), Place::finite_at(2)) == 2);
  CHECK(log_abs(1, Place::infinity()) == 0);
  CHECK(log_abs(-3, Place::infinity()) == doctest::Approx(std::log(3.0)));
  CHECK(Place::finite_at(3).local_factor() == doctest::Approx(std::log(3.0)));
  CHECK(Place::infinity().local_factor() == 1);
  CHECK_THROWS(Place::finite_at(4));
}

TEST_CASE("product formula") {
  CHECK(std::fabs(product_formula_check(6)) < 1e-12);
  CHECK(product_formula_check(-1) == 0);
  CHECK(std::fabs(product_formula_check(Rational(86477, 256))) < 1e-12);
  CHECK(std::fabs(product_formula_check(Rational(-1000003, 7 * 7 * 11))) < 1e-12);
}

TEST_CASE("factor") {
  auto f = factor(Integer(256) * 86477);
  REQUIRE(f.complete());
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0] == std::make_pair(Integer(2), 8L));
  CHECK(f.primes[1] == std::make_pair(Integer(86477), 1L));
  auto g = factor(Integer(256) * 86477, 1000);
  CHECK(g.complete());  // a prime cofactor above the bound is still recognised
  auto big = factor(Integer(1000003) * 1000033, 1000);
  CHECK_FALSE(big.complete());
  CHECK(big.cofactor == Integer(1000003) * 1000033);
  auto h = factor(-64);
  CHECK(h.primes == std::vector<std::pair<Integer, long>>{{2, 6}});
}

TEST_CASE("bigfloat") {
  BigFloat a(Rational(1, 3), 200), b(3, 200);
  CHECK(std::fabs((a * b).to_double() - 1) < 1e-50);
  CHECK(BigFloat(Rational(-8), 64).log_abs().to_double() == doctest::Approx(std::log(8.0)));
  // Exponents far beyond double range stay representable.
  BigFloat big(2, 64);
  for (int i = 0; i < 12; ++i) big = big * big;  // 2^4096
  CHECK(big.log_abs().to_double() == doctest::Approx(4096 * std::log(2.0)));
}
