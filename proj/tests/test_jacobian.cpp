// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <random>

#include "g2h/instances.hpp"
#include "g2h/jacobian.hpp"

using namespace g2h;

namespace {

Rational eval(const std::vector<Rational>& p, const Rational& x) {
  Rational s = 0;
  for (size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

std::vector<long> brute_gaps(const Curve& c, const MumfordPoint& p, long n_max) {
  std::vector<long> out;
  MumfordPoint q = identity();
  for (long n = 1; n <= n_max; ++n) {
    q = add(c, q, p);
    if (is_on_theta(q)) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("mumford pair through two points") {
  Curve c({1, 2, 3, 4, 5});
  MumfordPoint p = from_points(c, 1, 4, -2, -5).point;
  // a = (x - 1)(x + 2); b interpolates 4 at 1 and -5 at -2.
  CHECK(p.a == std::vector<Rational>{-2, 1, 1});
  CHECK(p.b == std::vector<Rational>{1, 3});
  CHECK(eval(p.b, 1) == 4);
  CHECK(eval(p.b, -2) == -5);
  CHECK(is_valid(c, p));
  CHECK(parse_point(c, "(1, 4) + (-2, -5)") == p);
  CHECK(parse_point(c, "-2,1;1,3") == p);
  CHECK_THROWS(parse_point(c, "(1,5)+(-2,-5)"));
}

TEST_CASE("inverse pair and tangent") {
  Curve c({1, 2, 3, 4, 5});
  auto r = from_points(c, 1, 4, 1, -4);
  CHECK(r.identity_warning);
  CHECK(r.point == identity());

  MumfordPoint t = from_points(c, 1, 4, 1, 4).point;
  CHECK(t.a == std::vector<Rational>{1, -2, 1});
  // b(1) = y and b'(1) = f'(1) / 2y.
  CHECK(eval(t.b, 1) == 4);
  REQUIRE(t.b.size() == 2);
  CHECK(t.b[1] == c.eval_df(1) / 8);
  CHECK(is_valid(c, t));
}

TEST_CASE("group law") {
  Curve c({1, 2, 3, 4, 5});
  MumfordPoint p = reference_instance().point;
  MumfordPoint o = identity();
  CHECK(add(c, p, o) == p);
  CHECK(add(c, o, p) == p);
  CHECK(add(c, p, neg(p)) == o);
  CHECK(neg(p).b == std::vector<Rational>{-1, -3});
  CHECK(neg(o) == o);
  CHECK(neg(neg(p)) == p);
  CHECK(scalar_mul(c, 0, p) == o);
  CHECK(scalar_mul(c, 1, p) == p);
  CHECK(scalar_mul(c, 2, p) == add(c, p, p));
  CHECK(scalar_mul(c, -3, p) == neg(add(c, p, add(c, p, p))));

  MumfordPoint q = nonintegral_instance().point;
  MumfordPoint pq = add(c, p, q);
  CHECK(is_valid(c, pq));
  CHECK(add(c, q, p) == pq);
  CHECK(add(c, add(c, p, q), p) == add(c, p, add(c, q, p)));
  CHECK(add(c, scalar_mul(c, 5, p), scalar_mul(c, 7, p)) == scalar_mul(c, 12, p));
}

TEST_CASE("reduction commutes with addition") {
  Curve c({1, 2, 3, 4, 5});
  MumfordPoint p = reference_instance().point;
  auto r = reduce_mod(c, p, 3);
  CHECK(r.a == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(r.b == std::vector<std::uint64_t>{1});
  CHECK(reduce_mod(c, identity(), 3) == identity_point(PrimeField{3}));
  CHECK_THROWS_AS(reduce_mod(c, MumfordPoint{{Rational(1, 3), 0, 1}, {}}, 3), PreconditionError);
  CHECK_THROWS(reduce_mod(c, nonintegral_instance().point, 3));
  PrimeField k{1009};
  auto f = curve_poly(k, c);
  for (long n = 2; n <= 6; ++n)
    CHECK(reduce_mod(c, scalar_mul(c, n, p), 1009) == cantor_mul(k, f, n, reduce_mod(c, p, 1009)));
}

TEST_CASE("theta divisor and two-torsion") {
  Curve c({1, 2, 3, 4, 5});
  CHECK_FALSE(is_on_theta(reference_instance().point));
  CHECK(is_on_theta(MumfordPoint{{-1, 1}, {4}}));  // (x - 1, 4)
  CHECK(is_on_theta(identity()));
  CHECK(is_two_torsion(c, identity()));
  CHECK_FALSE(is_two_torsion(c, reference_instance().point));
  Instance tt = two_torsion_instance();
  CHECK(is_two_torsion(tt.curve, tt.point));
  CHECK(add(tt.curve, tt.point, tt.point) == identity());
}

TEST_CASE("p-coordinates") {
  auto w = wp_coords(reference_instance().point);
  CHECK(w.array() == std::array<Rational, 4>{-1, 2, 6, 2});
  auto v = wp_coords(nonintegral_instance().point);
  CHECK(v.array() == std::array<Rational, 4>{-1, 2, Rational(-2, 3), Rational(26, 3)});
  CHECK_THROWS_AS(wp_coords(identity()), PreconditionError);
}

TEST_CASE("gap scan matches brute force") {
  Instance ref = reference_instance();
  CHECK(gap_scan(ref.curve, ref.point, 1000).empty());
  CHECK(T_membership(ref.curve, ref.point, 1));
  CHECK(T_membership(ref.curve, ref.point, 777));

  Instance tor = torsion_instance();
  CHECK(scalar_mul(tor.curve, 10, tor.point) == identity());
  CHECK(gap_scan(tor.curve, tor.point, 40) == brute_gaps(tor.curve, tor.point, 40));
  CHECK_FALSE(T_membership(tor.curve, tor.point, 10));

  Instance tt = two_torsion_instance();
  auto g = gap_scan(tt.curve, tt.point, 20);
  CHECK(g == std::vector<long>{2, 4, 6, 8, 10, 12, 14, 16, 18, 20});

  for (auto in : {theta2_instance(), theta3_instance()}) CHECK(gap_scan(in.curve, in.point, 30) == brute_gaps(in.curve, in.point, 30));
}

TEST_CASE("no three consecutive gaps off 2-torsion") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    Instance in = random_instance(rng, 5);
    auto g = gap_scan(in.curve, in.point, 300);
    for (size_t j = 2; j < g.size(); ++j) CHECK_FALSE((g[j] == g[j - 1] + 1 && g[j - 1] == g[j - 2] + 1));
  }
}
