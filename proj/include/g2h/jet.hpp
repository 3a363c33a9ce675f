// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <climits>
#include <vector>

#include "g2h/numeric.hpp"

namespace g2h {

// Truncated bivariate jet over Q. Stores derivative values c(i, j) = d1^i d2^j f
// at a point for i + j <= order. Constants carry an unbounded order.
class Jet {
 public:
  static constexpr int kUnbounded = INT_MAX;

  Jet() : Jet(Rational(0)) {}
  explicit Jet(const Rational& c) : order_(kUnbounded), c_{c} {}
  explicit Jet(int order) : order_(order), c_(size_for(order)) {}

  int order() const { return order_; }
  bool is_constant() const { return order_ == kUnbounded; }
  const Rational& value() const { return c_[0]; }

  Rational& at(int i, int j) { return c_[index(i, j)]; }
  const Rational& at(int i, int j) const { return c_[index(i, j)]; }

  // d1^r1 d2^r2 of this jet, of order order() - r1 - r2.
  Jet shift(int r1, int r2) const {
    if (is_constant()) return Jet(Rational(r1 + r2 == 0 ? c_[0] : Rational(0)));
    int o = order_ - r1 - r2;
    if (o < 0) throw std::logic_error("jet order exhausted");
    Jet r(o);
    for (int i = 0; i <= o; ++i)
      for (int j = 0; i + j <= o; ++j) r.at(i, j) = at(i + r1, j + r2);
    return r;
  }

  Jet truncate(int o) const {
    if (is_constant() || o >= order_) return *this;
    Jet r(o);
    for (int i = 0; i <= o; ++i)
      for (int j = 0; i + j <= o; ++j) r.at(i, j) = at(i, j);
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return combine(a, b, 1); }
  friend Jet operator-(const Jet& a, const Jet& b) { return combine(a, b, -1); }
  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    if (a.is_constant()) return scaled(b, a.c_[0]);
    if (b.is_constant()) return scaled(a, b.c_[0]);
    int o = std::min(a.order_, b.order_);
    Jet r(o);
    // Leibniz rule on derivative values.
    for (int i = 0; i <= o; ++i)
      for (int j = 0; i + j <= o; ++j) {
        Rational s = 0;
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q) {
            const Rational& x = a.at(p, q);
            if (x == 0) continue;
            s += binom(i, p) * binom(j, q) * x * b.at(i - p, j - q);
          }
        r.at(i, j) = s;
      }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.c_[0] == 0) throw DivisionByZero("jet division by a function vanishing at the point");
    if (b.is_constant()) return scaled(a, 1 / b.c_[0]);
    int o = std::min(a.order_, b.order_);
    Jet r(o);
    const Rational inv = 1 / b.c_[0];
    for (int n = 0; n <= o; ++n)
      for (int i = n; i >= 0; --i) {
        int j = n - i;
        Rational s = a.is_constant() ? Rational(n == 0 ? a.c_[0] : Rational(0)) : a.at(i, j);
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q) {
            if (p == 0 && q == 0) continue;
            const Rational& x = b.at(p, q);
            if (x == 0) continue;
            s -= binom(i, p) * binom(j, q) * x * r.at(i - p, j - q);
          }
        r.at(i, j) = s * inv;
      }
    return r;
  }

  bool operator==(const Jet& o) const { return order_ == o.order_ && c_ == o.c_; }

 private:
  int order_;
  std::vector<Rational> c_;

  static size_t size_for(int o) { return static_cast<size_t>((o + 1) * (o + 2) / 2); }
  // Triangular layout by total degree.
  static size_t index(int i, int j) {
    int n = i + j;
    return static_cast<size_t>(n * (n + 1) / 2 + j);
  }
  static long binom(int n, int k) {
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
  }
  static Jet scaled(const Jet& a, const Rational& c) {
    Jet r = a;
    for (auto& x : r.c_) x *= c;
    return r;
  }
  static Jet combine(const Jet& a, const Jet& b, int sign) {
    if (a.is_constant() && b.is_constant()) return Jet(sign > 0 ? Rational(a.c_[0] + b.c_[0]) : Rational(a.c_[0] - b.c_[0]));
    int o = std::min(a.order_, b.order_);
    Jet r(o);
    for (int n = 0; n <= o; ++n)
      for (int j = 0; j <= n; ++j) {
        int i = n - j;
        Rational x = a.is_constant() ? Rational(n == 0 ? a.c_[0] : Rational(0)) : a.at(i, j);
        Rational y = b.is_constant() ? Rational(n == 0 ? b.c_[0] : Rational(0)) : b.at(i, j);
        r.at(i, j) = sign > 0 ? Rational(x + y) : Rational(x - y);
      }
    return r;
  }
};

}  // namespace g2h
