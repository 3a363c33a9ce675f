// SPDX-License-Identifier: MIT
#include "g2h/instances.hpp"

namespace g2h {

namespace {

Instance from_pair(const std::string& name, const std::array<Integer, 5>& mu, long x1, long y1, long x2, long y2) {
  Curve c(mu);
  return Instance{name, c, from_points(c, x1, y1, x2, y2).point};
}

}  // namespace

Instance reference_instance() { return from_pair("reference", {1, 2, 3, 4, 5}, 1, 4, -2, -5); }

Instance nonintegral_instance() { return from_pair("nonintegral", {1, 2, 3, 4, 5}, 1, 4, -2, 5); }

Instance j1_instance() {
  Curve c({25, 20, 30, 40, 50});
  return Instance{"J1", c,
                  make_point(c, Rational(148, 5), Rational(1081, 25), Rational(1799, 25), Rational(13803, 125))};
}

Instance j2_instance() {
  Curve c({100, 200, 300, 400, 500});
  return Instance{"J2", c, make_point(c, 200, 400, 1990, 3990)};
}

Instance torsion_instance() { return from_pair("torsion10", {1, 0, 0, 0, 0}, 0, 1, -1, 0); }

Instance two_torsion_instance() { return from_pair("two_torsion", {0, 4, 0, -5, 0}, 0, 0, 1, 0); }

Instance theta2_instance() { return from_pair("theta2", {-2, 1, 2, -2, 1}, -1, 1, 1, 1); }

Instance theta3_instance() { return from_pair("theta3", {0, -3, 1, 0, 1}, -1, 2, 0, 0); }

Instance random_instance(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    long x1 = d(rng), x2 = x1 + 1;
    long y1 = d(rng), y2 = d(rng);
    if (x1 == 0 || x2 == 0 || y1 == 0 || y2 == 0 || y1 == y2) continue;
    std::array<Integer, 5> mu;
    mu[2] = d(rng);
    mu[3] = d(rng);
    mu[4] = d(rng);
    // Fit mu1, mu0 so that both points lie on the curve.
    auto rest = [&](long x) {
      Integer X = x;
      return Integer(X * X * X * X * X + mu[4] * X * X * X * X + mu[3] * X * X * X + mu[2] * X * X);
    };
    Integer r1 = Integer(y1) * y1 - rest(x1);
    Integer r2 = Integer(y2) * y2 - rest(x2);
    mu[1] = r2 - r1;
    mu[0] = r1 - mu[1] * x1;
    bool zero = false;
    for (auto& m : mu) zero = zero || m == 0;
    if (zero || discriminant(mu) == 0) continue;
    Curve c(mu);
    MumfordPoint p = from_points(c, x1, y1, x2, y2).point;
    auto w = wp_coords(p).array();
    bool wz = false;
    for (auto& x : w) wz = wz || x == 0;
    if (wz || is_two_torsion(c, p)) continue;
    return Instance{"random", c, p};
  }
}

}  // namespace g2h
