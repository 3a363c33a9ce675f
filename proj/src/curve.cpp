// SPDX-License-Identifier: MIT
#include "g2h/curve.hpp"

#include <sstream>

namespace g2h {

namespace {

// Bareiss fraction-free determinant.
Integer det_bareiss(std::vector<std::vector<Integer>> m) {
  const size_t n = m.size();
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Integer discriminant(const std::array<Integer, 5>& mu) {
  // Sylvester matrix of f (degree 5) and f' (degree 4).
  std::vector<Integer> f = {mu[0], mu[1], mu[2], mu[3], mu[4], 1};
  std::vector<Integer> df = {mu[1], 2 * mu[2], 3 * mu[3], 4 * mu[4], 5};
  std::vector<std::vector<Integer>> s(9, std::vector<Integer>(9, 0));
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i <= 5; ++i) s[r][r + i] = f[5 - i];
  for (int r = 0; r < 5; ++r)
    for (int i = 0; i <= 4; ++i) s[4 + r][r + i] = df[4 - i];
  // disc(f) = (-1)^(n(n-1)/2) Res(f, f') = Res(f, f') for n = 5.
  return 256 * det_bareiss(s);
}

Curve::Curve(const std::array<Integer, 5>& mu) : mu_(mu), disc_(discriminant(mu)) {
  if (disc_ == 0) throw PreconditionError("singular model: f is not squarefree");
}

Curve Curve::parse(const std::string& text) {
  std::array<Integer, 5> mu;
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 5) throw UsageError("curve needs exactly five coefficients mu0..mu4");
    Rational r = parse_rational(item);
    if (r.get_den() != 1) throw UsageError("curve coefficients must be integers");
    mu[i++] = r.get_num();
  }
  if (i != 5) throw UsageError("curve needs exactly five coefficients mu0..mu4");
  return Curve(mu);
}

std::vector<Rational> Curve::f() const {
  std::vector<Rational> out;
  for (auto& m : mu_) out.emplace_back(m);
  out.emplace_back(1);
  return out;
}

Rational Curve::eval_f(const Rational& x) const {
  Rational r = 1;
  for (int i = 4; i >= 0; --i) r = r * x + mu_[i];
  return r;
}

Rational Curve::eval_df(const Rational& x) const {
  Rational r = 5;
  for (int i = 4; i >= 1; --i) r = r * x + i * Rational(mu_[i]);
  return r;
}

bool Curve::contains(const Rational& x, const Rational& y) const { return y * y == eval_f(x); }

std::string Curve::str() const {
  std::string s;
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + mu_[i].get_str();
  return s;
}

BadPrimes bad_primes(const Curve& c, FactorMode mode, unsigned long threshold) {
  BadPrimes out;
  Integer d = abs(c.disc());
  if (mode == FactorMode::full) {
    Factorization f = factor(d);
    out.primes = f.primes;
    out.cofactor = f.cofactor;
    return out;
  }
  for (unsigned long p = 2; p <= threshold && d > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      long e = 0;
      while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
        ++e;
      }
      out.primes.emplace_back(Integer(p), e);
    }
  }
  out.cofactor = d;
  return out;
}

bool is_weierstrass(const Curve& c, const Rational& x, const Rational& y) {
  if (!c.contains(x, y)) throw PreconditionError("point (" + x.get_str() + "," + y.get_str() + ") is not on the curve");
  return y == 0;
}

}  // namespace g2h
