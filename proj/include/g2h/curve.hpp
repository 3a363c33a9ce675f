// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2h/numeric.hpp"

namespace g2h {

// y^2 = x^5 + mu4 x^4 + mu3 x^3 + mu2 x^2 + mu1 x + mu0 over the rationals.
class Curve {
 public:
  explicit Curve(const std::array<Integer, 5>& mu);
  // "mu0,mu1,mu2,mu3,mu4"
  static Curve parse(const std::string& text);

  const std::array<Integer, 5>& mu() const { return mu_; }
  const Integer& disc() const { return disc_; }
  // f0..f5 with f5 = 1.
  std::vector<Rational> f() const;
  Rational eval_f(const Rational& x) const;
  Rational eval_df(const Rational& x) const;
  bool contains(const Rational& x, const Rational& y) const;
  std::string str() const;

  bool operator==(const Curve& o) const { return mu_ == o.mu_; }

 private:
  std::array<Integer, 5> mu_;
  Integer disc_;
};

// 2^8 * disc(f), with disc(f) = Res(f, f') for monic quintic f.
Integer discriminant(const std::array<Integer, 5>& mu);
inline Integer discriminant(const Curve& c) { return c.disc(); }

struct BadPrimes {
  std::vector<std::pair<Integer, long>> primes;  // q with ord_q(disc)
  Integer cofactor = 1;                          // unfactored part of |disc|
  bool complete() const { return cofactor == 1; }
};

enum class FactorMode { full, threshold };
BadPrimes bad_primes(const Curve& c, FactorMode mode = FactorMode::full, unsigned long threshold = 100000);

bool is_weierstrass(const Curve& c, const Rational& x, const Rational& y);

}  // namespace g2h
