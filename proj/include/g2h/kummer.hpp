// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>

#include "g2h/jacobian.hpp"
#include "g2h/pack.hpp"

namespace g2h {

// Projective point on the Kummer surface, stored as a primitive integer
// quadruple with the first nonzero coordinate positive.
struct KummerPoint {
  std::array<Integer, 4> x;

  static KummerPoint from_rational(const std::array<Rational, 4>& q);
  bool operator==(const KummerPoint& o) const { return x == o.x; }
  bool on_theta() const { return x[0] == 0; }
  std::string str() const;
};

// (1 : s : t : beta0) off theta; (0 : 1 : x1 : x1^2) for a single point; (0 : 0 : 0 : 1) for the identity.
KummerPoint kappa(const Curve& c, const MumfordPoint& p, const FormulaPack& pack);
// The four pack coordinate polynomials at p, unscaled (p off theta).
std::array<Rational, 4> kappa_affine(const Curve& c, const MumfordPoint& p, const FormulaPack& pack);

// Duplication quartics specialised to one curve, with integer coefficients.
class Duplication {
 public:
  Duplication(const Curve& c, const FormulaPack& pack);
  KummerPoint operator()(const KummerPoint& x) const;
  // delta_i at an arbitrary rational quadruple, using the pack scaling.
  std::array<Rational, 4> eval(const std::array<Rational, 4>& x) const;

 private:
  // delta_i = sum_ab Q_ab * sum_cd L[i][ab][cd] Q_cd with Q_ab = x_a x_b.
  std::array<std::array<std::array<Integer, 10>, 10>, 4> L_;
  Rational scale_;  // pack delta = scale * integral form
};

KummerPoint delta_dup(const KummerPoint& x, const Curve& c, const FormulaPack& pack);

// log max_i |x_i / x_1|_v. At a finite place the value is in units of log q.
double fs_local_height(const KummerPoint& x, const Place& v);

struct OracleResult {
  double value;                // 4^-k log max |x_i| of kappa(2^k p)
  double previous;             // same at k - 1
  KummerPoint last;
};
// Throws PreconditionError if some 2^j p (j <= k) lies on theta.
OracleResult duplication_height_oracle(const Curve& c, const MumfordPoint& p, const FormulaPack& pack, int k = 12);

}  // namespace g2h
