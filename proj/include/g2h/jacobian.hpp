// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2h/curve.hpp"

namespace g2h {

// Coefficient fields for Mumford arithmetic.
struct RationalField {
  using E = Rational;
  E zero() const { return 0; }
  E one() const { return 1; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const E& a) const { return a == 0; }
  E from(const Rational& x) const { return x; }
};

struct PrimeField {
  using E = std::uint64_t;
  std::uint64_t q;
  E zero() const { return 0; }
  E one() const { return 1; }
  E add(E a, E b) const { return (a + b) % q; }
  E sub(E a, E b) const { return (a + q - b) % q; }
  E mul(E a, E b) const { return static_cast<E>((unsigned __int128)a * b % q); }
  E neg(E a) const { return a ? q - a : 0; }
  E inv(E a) const;
  bool is_zero(E a) const { return a == 0; }
  E from(const Rational& x) const;  // requires q-integral x
};

// Dense univariate polynomial, lowest degree first, no trailing zeros.
template <class F>
using Poly = std::vector<typename F::E>;

template <class F>
struct Mumford {
  Poly<F> a;  // monic, deg <= 2
  Poly<F> b;  // deg < deg a
  bool operator==(const Mumford& o) const { return a == o.a && b == o.b; }
  int degree() const { return static_cast<int>(a.size()) - 1; }
};

using MumfordPoint = Mumford<RationalField>;
using MumfordPointFq = Mumford<PrimeField>;

// Curve f(x) with coefficients mapped into F.
template <class F>
Poly<F> curve_poly(const F& field, const Curve& c);

template <class F>
Mumford<F> identity_point(const F& field);
template <class F>
Mumford<F> cantor_add(const F& field, const Poly<F>& f, const Mumford<F>& p, const Mumford<F>& q);
template <class F>
Mumford<F> cantor_neg(const F& field, const Mumford<F>& p);
template <class F>
Mumford<F> cantor_mul(const F& field, const Poly<F>& f, long n, const Mumford<F>& p);

// Rational API.
struct FromPointsResult {
  MumfordPoint point;
  bool identity_warning = false;  // inputs were an inverse pair
};
FromPointsResult from_points(const Curve& c, const Rational& x1, const Rational& y1, const Rational& x2,
                             const Rational& y2);
MumfordPoint make_point(const Curve& c, const Rational& a0, const Rational& a1, const Rational& b0,
                        const Rational& b1);
// "a0,a1;b0,b1" or "(x1,y1)+(x2,y2)".
MumfordPoint parse_point(const Curve& c, const std::string& text);
std::string to_string(const MumfordPoint& p);
bool is_valid(const Curve& c, const MumfordPoint& p);

MumfordPoint identity();
MumfordPoint add(const Curve& c, const MumfordPoint& p, const MumfordPoint& q);
MumfordPoint neg(const MumfordPoint& p);
MumfordPoint scalar_mul(const Curve& c, long n, const MumfordPoint& p);
bool is_on_theta(const MumfordPoint& p);
bool is_two_torsion(const Curve& c, const MumfordPoint& p);

// (p12, p22, p122, p222) = (-a1, -a0, 2 b1, 2 b0).
struct PCoordinates {
  Rational p12, p22, p122, p222;
  std::array<Rational, 4> array() const { return {p12, p22, p122, p222}; }
};
PCoordinates wp_coords(const MumfordPoint& p);

// Coefficientwise reduction at a good prime q.
MumfordPointFq reduce_mod(const Curve& c, const MumfordPoint& p, std::uint64_t q);

// Membership of n in T(p): n*p off the theta divisor. A good prime where
// n*p reduces off theta certifies membership; otherwise n*p is computed over Q.
bool T_membership(const Curve& c, const MumfordPoint& p, long n);
// Sorted list of n <= n_max with n*p on the theta divisor.
std::vector<long> gap_scan(const Curve& c, const MumfordPoint& p, long n_max);

// x -> u^2 x, y -> u^5 y with the least u > 0 making the p-coordinates integral.
struct Integralized {
  Curve curve;
  MumfordPoint point;
  Integer u;
};
Integralized integralize(const Curve& c, const MumfordPoint& p);
bool has_integral_coords(const MumfordPoint& p);

}  // namespace g2h
