// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <random>

#include "g2h/instances.hpp"
#include "g2h/kummer.hpp"

using namespace g2h;

namespace {

const FormulaPack& pack() {
  static const FormulaPack p = load_pack(default_pack_path());
  return p;
}

// Classical Kummer coordinates (1 : x1 + x2 : x1 x2 : beta0) from two affine points.
KummerPoint classical(const Curve& c, const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
  auto f = c.f();
  Rational s = x1 + x2, t = x1 * x2;
  Rational F0 = 2 * f[0] + f[1] * s + 2 * f[2] * t + f[3] * t * s + 2 * f[4] * t * t + f[5] * t * t * s;
  Rational d = x1 - x2;
  return KummerPoint::from_rational({1, s, t, (F0 - 2 * y1 * y2) / (d * d)});
}

}  // namespace

TEST_CASE("kappa of the worked example") {
  Instance in = reference_instance();
  KummerPoint k = kappa(in.curve, in.point, pack());
  CHECK(k.str() == "(1 : -1 : -2 : 8)");
  CHECK(k == classical(in.curve, 1, 4, -2, -5));
  CHECK(kappa(in.curve, neg(in.point), pack()) == k);
  CHECK(kappa(in.curve, identity(), pack()) == KummerPoint{{0, 0, 0, 1}});
  CHECK(kappa(in.curve, MumfordPoint{{-1, 1}, {4}}, pack()) == KummerPoint{{0, 1, 1, 1}});
}

TEST_CASE("kappa against classical coordinates") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    Instance in = random_instance(rng, 5);
    // random_instance puts the points at x1 and x1 + 1
    Rational x1 = -in.point.a[1] / 2 - Rational(1, 2);
    Rational x2 = x1 + 1;
    auto b = [&](const Rational& x) -> Rational { return in.point.b[0] + (in.point.b.size() > 1 ? in.point.b[1] * x : Rational(0)); };
    CHECK(kappa(in.curve, in.point, pack()) == classical(in.curve, x1, b(x1), x2, b(x2)));
  }
}

TEST_CASE("duplication") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Instance in = random_instance(rng, 5);
    Duplication dup(in.curve, pack());
    CHECK(dup(kappa(in.curve, in.point, pack())) == kappa(in.curve, add(in.curve, in.point, in.point), pack()));
  }
  Instance tt = two_torsion_instance();
  CHECK(Duplication(tt.curve, pack())(kappa(tt.curve, tt.point, pack())) == KummerPoint{{0, 0, 0, 1}});
  Instance ref = reference_instance();
  CHECK(delta_dup(KummerPoint{{0, 0, 0, 1}}, ref.curve, pack()) == KummerPoint{{0, 0, 0, 1}});
}

TEST_CASE("kummer local heights") {
  CHECK(fs_local_height(KummerPoint{{2, 1, 1, 1}}, Place::finite_at(2)) == 1);
  CHECK(fs_local_height(KummerPoint{{1, 4, 2, 8}}, Place::finite_at(2)) == 0);
  CHECK(fs_local_height(KummerPoint{{1, -1, -2, 8}}, Place::infinity()) == doctest::Approx(std::log(8.0)));
}

TEST_CASE("doubling oracle converges geometrically") {
  Instance in = reference_instance();
  OracleResult a = duplication_height_oracle(in.curve, in.point, pack(), 6);
  OracleResult b = duplication_height_oracle(in.curve, in.point, pack(), 8);
  double d6 = std::fabs(a.value - a.previous), d8 = std::fabs(b.value - b.previous);
  CHECK(d8 < d6 / 8);
  CHECK(std::fabs(b.value - 2 * 0.905661971737515) < 1e-3);
  CHECK_THROWS_AS(duplication_height_oracle(theta2_instance().curve, theta2_instance().point, pack(), 4),
                  PreconditionError);
}

TEST_CASE("torsion points have bounded Kummer height") {
  Instance t = torsion_instance();
  KummerPoint x = kappa(t.curve, t.point, pack());
  double worst = 0;
  for (int k = 1; k <= 10; ++k) {
    x = delta_dup(x, t.curve, pack());
    double big = 0;
    for (auto& c : x.x)
      if (c != 0) big = std::max(big, std::log(std::fabs(c.get_d())));
    worst = std::max(worst, big);
  }
  CHECK(worst < 20);
}
