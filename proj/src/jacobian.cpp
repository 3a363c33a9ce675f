// SPDX-License-Identifier: MIT
#include "g2h/jacobian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace g2h {

PrimeField::E PrimeField::inv(E a) const {
  if (a == 0) throw DivisionByZero("inverse of zero mod q");
  // Fermat; q is prime.
  E r = 1, b = a, e = q - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

PrimeField::E PrimeField::from(const Rational& x) const {
  Integer qq(std::to_string(q));
  Integer den = x.get_den() % qq;
  if (den == 0) throw PreconditionError("coefficient " + x.get_str() + " is not integral at " + std::to_string(q));
  Integer num = x.get_num() % qq;
  if (num < 0) num += qq;
  return mul(static_cast<E>(num.get_ui()), inv(static_cast<E>(den.get_ui())));
}

namespace {

template <class F>
void trim(const F& k, Poly<F>& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

template <class F>
int deg(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
Poly<F> padd(const F& k, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), k.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k.add(r[i], a[i]);
  for (size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
  trim(k, r);
  return r;
}

template <class F>
Poly<F> pneg(const F& k, const Poly<F>& a) {
  Poly<F> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k.neg(a[i]);
  return r;
}

template <class F>
Poly<F> psub(const F& k, const Poly<F>& a, const Poly<F>& b) {
  return padd(k, a, pneg(k, b));
}

template <class F>
Poly<F> pmul(const F& k, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, k.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(k, r);
  return r;
}

template <class F>
Poly<F> pscale(const F& k, const typename F::E& c, const Poly<F>& a) {
  Poly<F> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k.mul(c, a[i]);
  trim(k, r);
  return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> pdivmod(const F& k, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> q(a.size() - b.size() + 1, k.zero());
  auto lc_inv = k.inv(b.back());
  for (int i = deg<F>(a) - deg<F>(b); i >= 0; --i) {
    auto c = k.mul(a[i + b.size() - 1], lc_inv);
    q[i] = c;
    if (k.is_zero(c)) continue;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] = k.sub(a[i + j], k.mul(c, b[j]));
  }
  trim(k, a);
  trim(k, q);
  return {q, a};
}

template <class F>
Poly<F> pmod(const F& k, const Poly<F>& a, const Poly<F>& b) {
  return pdivmod(k, a, b).second;
}

template <class F>
Poly<F> pexact_div(const F& k, const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = pdivmod(k, a, b);
  if (!r.empty()) throw std::logic_error("inexact polynomial division in Cantor composition");
  return q;
}

template <class F>
Poly<F> pmonic(const F& k, const Poly<F>& a) {
  if (a.empty()) return a;
  return pscale(k, k.inv(a.back()), a);
}

// Returns (g, u, v) with u a + v b = g and g monic (or zero when a = b = 0).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> pxgcd(const F& k, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b, s0 = {k.one()}, s1 = {}, t0 = {}, t1 = {k.one()};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(k, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = psub(k, s0, pmul(k, q, s1));
    Poly<F> t2 = psub(k, t0, pmul(k, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  auto c = k.inv(r0.back());
  return {pscale(k, c, r0), pscale(k, c, s0), pscale(k, c, t0)};
}

}  // namespace

template <class F>
Poly<F> curve_poly(const F& field, const Curve& c) {
  Poly<F> f;
  for (auto& m : c.mu()) f.push_back(field.from(Rational(m)));
  f.push_back(field.one());
  return f;
}

template <class F>
Mumford<F> identity_point(const F& field) {
  return Mumford<F>{{field.one()}, {}};
}

template <class F>
Mumford<F> cantor_add(const F& k, const Poly<F>& f, const Mumford<F>& p, const Mumford<F>& q) {
  if (p.a.size() == 1) return q;
  if (q.a.size() == 1) return p;
  auto [d1, e1, e2] = pxgcd(k, p.a, q.a);
  auto [d, c1, c2] = pxgcd(k, d1, padd(k, p.b, q.b));
  Poly<F> s1 = pmul(k, c1, e1), s2 = pmul(k, c1, e2), s3 = c2;
  Poly<F> a = pexact_div(k, pmul(k, p.a, q.a), pmul(k, d, d));
  Poly<F> num = padd(k, padd(k, pmul(k, pmul(k, s1, p.a), q.b), pmul(k, pmul(k, s2, q.a), p.b)),
                     pmul(k, s3, padd(k, pmul(k, p.b, q.b), f)));
  Poly<F> b = pmod(k, pexact_div(k, num, d), a);
  while (deg<F>(a) > 2) {
    Poly<F> a2 = pexact_div(k, psub(k, f, pmul(k, b, b)), a);
    a = pmonic(k, a2);
    b = pmod(k, pneg(k, b), a);
  }
  a = pmonic(k, a);
  b = pmod(k, b, a);
  return Mumford<F>{a, b};
}

template <class F>
Mumford<F> cantor_neg(const F& k, const Mumford<F>& p) {
  return Mumford<F>{p.a, pneg(k, p.b)};
}

template <class F>
Mumford<F> cantor_mul(const F& k, const Poly<F>& f, long n, const Mumford<F>& p) {
  if (n < 0) return cantor_mul(k, f, -n, cantor_neg(k, p));
  Mumford<F> r = identity_point(k), base = p;
  while (n) {
    if (n & 1) r = cantor_add(k, f, r, base);
    n >>= 1;
    if (n) base = cantor_add(k, f, base, base);
  }
  return r;
}

template Poly<RationalField> curve_poly(const RationalField&, const Curve&);
template Poly<PrimeField> curve_poly(const PrimeField&, const Curve&);
template Mumford<RationalField> identity_point(const RationalField&);
template Mumford<PrimeField> identity_point(const PrimeField&);
template Mumford<RationalField> cantor_add(const RationalField&, const Poly<RationalField>&,
                                           const Mumford<RationalField>&, const Mumford<RationalField>&);
template Mumford<PrimeField> cantor_add(const PrimeField&, const Poly<PrimeField>&, const Mumford<PrimeField>&,
                                        const Mumford<PrimeField>&);
template Mumford<RationalField> cantor_neg(const RationalField&, const Mumford<RationalField>&);
template Mumford<PrimeField> cantor_neg(const PrimeField&, const Mumford<PrimeField>&);
template Mumford<RationalField> cantor_mul(const RationalField&, const Poly<RationalField>&, long,
                                           const Mumford<RationalField>&);
template Mumford<PrimeField> cantor_mul(const PrimeField&, const Poly<PrimeField>&, long,
                                        const Mumford<PrimeField>&);

// ------------------------------------------------------------ rational API

namespace {
const RationalField QQ;
}

MumfordPoint identity() { return identity_point(QQ); }

bool is_valid(const Curve& c, const MumfordPoint& p) {
  if (p.a.empty() || p.a.back() != 1 || p.a.size() > 3) return false;
  if (p.b.size() >= p.a.size()) return false;
  if (!p.b.empty() && p.b.back() == 0) return false;
  Poly<RationalField> r = pmod(QQ, psub(QQ, pmul(QQ, p.b, p.b), curve_poly(QQ, c)), p.a);
  return r.empty();
}

MumfordPoint make_point(const Curve& c, const Rational& a0, const Rational& a1, const Rational& b0,
                        const Rational& b1) {
  MumfordPoint p{{a0, a1, 1}, {b0, b1}};
  trim(QQ, p.b);
  if (!is_valid(c, p)) throw PreconditionError("(a, b) is not a Mumford pair: a does not divide b^2 - f");
  return p;
}

FromPointsResult from_points(const Curve& c, const Rational& x1, const Rational& y1, const Rational& x2,
                             const Rational& y2) {
  if (!c.contains(x1, y1)) throw PreconditionError("point (" + x1.get_str() + "," + y1.get_str() + ") is not on the curve");
  if (!c.contains(x2, y2)) throw PreconditionError("point (" + x2.get_str() + "," + y2.get_str() + ") is not on the curve");
  if (x1 != x2) {
    Rational b1 = (y1 - y2) / (x1 - x2);
    Rational b0 = y1 - b1 * x1;
    return {make_point(c, x1 * x2, -(x1 + x2), b0, b1), false};
  }
  if (y1 == -y2) return {identity(), true};
  // Doubled point: b(x1) = y1 and 2 y1 b'(x1) = f'(x1).
  Rational b1 = c.eval_df(x1) / (2 * y1);
  Rational b0 = y1 - b1 * x1;
  return {make_point(c, x1 * x1, -2 * x1, b0, b1), false};
}

MumfordPoint parse_point(const Curve& c, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (!t.empty() && t[0] == '(') {
    // (x1,y1)+(x2,y2)
    auto close1 = t.find(')');
    auto plus = t.find('+', close1);
    if (close1 == std::string::npos || plus == std::string::npos || plus + 1 >= t.size() || t[plus + 1] != '(' ||
        t.back() != ')')
      throw UsageError("malformed point '" + text + "', expected (x1,y1)+(x2,y2)");
    auto pair_of = [&](const std::string& s) {
      auto comma = s.find(',');
      if (comma == std::string::npos) throw UsageError("malformed affine point '" + s + "'");
      return std::make_pair(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
    };
    auto [x1, y1] = pair_of(t.substr(1, close1 - 1));
    auto [x2, y2] = pair_of(t.substr(plus + 2, t.size() - plus - 3));
    FromPointsResult r = from_points(c, x1, y1, x2, y2);
    return r.point;
  }
  auto semi = t.find(';');
  if (semi == std::string::npos) throw UsageError("malformed point '" + text + "', expected a0,a1;b0,b1");
  auto split = [&](const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("malformed point '" + text + "', expected a0,a1;b0,b1");
    return std::make_pair(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
  };
  auto [a0, a1] = split(t.substr(0, semi));
  auto [b0, b1] = split(t.substr(semi + 1));
  return make_point(c, a0, a1, b0, b1);
}

std::string to_string(const MumfordPoint& p) {
  auto show = [](const Poly<RationalField>& q) {
    if (q.empty()) return std::string("0");
    std::string s;
    for (int i = deg<RationalField>(q); i >= 0; --i) {
      if (q[i] == 0) continue;
      std::string c = q[i].get_str();
      if (!s.empty()) s += (q[i] < 0) ? " - " : " + ";
      else if (q[i] < 0) s += "-";
      if (q[i] < 0) c = Rational(-q[i]).get_str();
      if (i == 0 || c != "1") s += c;
      if (i >= 1) s += (i == 0 || c != "1" ? "*x" : "x");
      if (i == 2) s += "^2";
    }
    return s;
  };
  return "(" + show(p.a) + ", " + show(p.b) + ")";
}

MumfordPoint add(const Curve& c, const MumfordPoint& p, const MumfordPoint& q) {
  return cantor_add(QQ, curve_poly(QQ, c), p, q);
}

MumfordPoint neg(const MumfordPoint& p) { return cantor_neg(QQ, p); }

MumfordPoint scalar_mul(const Curve& c, long n, const MumfordPoint& p) {
  return cantor_mul(QQ, curve_poly(QQ, c), n, p);
}

bool is_on_theta(const MumfordPoint& p) { return p.degree() < 2; }

bool is_two_torsion(const Curve& c, const MumfordPoint& p) { return add(c, p, p) == identity(); }

PCoordinates wp_coords(const MumfordPoint& p) {
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  Rational b0 = p.b.size() > 0 ? p.b[0] : Rational(0);
  Rational b1 = p.b.size() > 1 ? p.b[1] : Rational(0);
  return PCoordinates{-p.a[1], -p.a[0], 2 * b1, 2 * b0};
}

MumfordPointFq reduce_mod(const Curve& c, const MumfordPoint& p, std::uint64_t q) {
  if (q == 2 || !is_prime(Integer(std::to_string(q)))) throw PreconditionError("reduce_mod needs an odd prime");
  if (c.disc() % Integer(std::to_string(q)) == 0)
    throw PreconditionError("prime " + std::to_string(q) + " divides the discriminant");
  PrimeField k{q};
  MumfordPointFq r;
  for (auto& x : p.a) r.a.push_back(k.from(x));
  for (auto& x : p.b) r.b.push_back(k.from(x));
  trim(k, r.a);
  trim(k, r.b);
  return r;
}

namespace {

// Three large primes of good reduction at which p is integral.
std::vector<std::uint64_t> certificate_primes(const Curve& c, const MumfordPoint& p) {
  Integer bad = c.disc();
  for (auto* poly : {&p.a, &p.b})
    for (auto& x : *poly) bad *= x.get_den();
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = (1ULL << 31) - 1; out.size() < 3; q -= 2) {
    Integer qq(std::to_string(q));
    if (!is_prime(qq) || bad % qq == 0) continue;
    out.push_back(q);
  }
  return out;
}

}  // namespace

bool T_membership(const Curve& c, const MumfordPoint& p, long n) {
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  if (n <= 0) throw std::invalid_argument("T_membership needs n > 0");
  for (std::uint64_t q : certificate_primes(c, p)) {
    PrimeField k{q};
    if (cantor_mul(k, curve_poly(k, c), n, reduce_mod(c, p, q)).degree() == 2) return true;
  }
  return scalar_mul(c, n, p).degree() == 2;
}

std::vector<long> gap_scan(const Curve& c, const MumfordPoint& p, long n_max) {
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  std::vector<std::uint64_t> primes = certificate_primes(c, p);
  std::vector<PrimeField> fields;
  std::vector<Poly<PrimeField>> fs;
  std::vector<MumfordPointFq> base, cur;
  for (std::uint64_t q : primes) {
    fields.push_back(PrimeField{q});
    fs.push_back(curve_poly(fields.back(), c));
    base.push_back(reduce_mod(c, p, q));
    cur.push_back(identity_point(fields.back()));
  }
  std::vector<long> gaps;
  for (long n = 1; n <= n_max; ++n) {
    bool candidate = true;
    for (size_t i = 0; i < primes.size(); ++i) {
      cur[i] = cantor_add(fields[i], fs[i], cur[i], base[i]);
      if (cur[i].degree() == 2) candidate = false;
    }
    if (candidate && scalar_mul(c, n, p).degree() < 2) gaps.push_back(n);
  }
  return gaps;
}

bool has_integral_coords(const MumfordPoint& p) {
  for (auto* poly : {&p.a, &p.b})
    for (auto& x : *poly)
      if (x.get_den() != 1) return false;
  return true;
}

Integralized integralize(const Curve& c, const MumfordPoint& p) {
  PCoordinates w = wp_coords(p);
  const std::array<std::pair<Rational, long>, 4> weighted = {
      std::make_pair(w.p12, 2L), std::make_pair(w.p22, 4L), std::make_pair(w.p122, 3L), std::make_pair(w.p222, 5L)};
  Integer den = 1;
  for (auto& [x, wt] : weighted) den = lcm(den, Integer(x.get_den()));
  Integer u = 1;
  if (den != 1) {
    Factorization f = factor(den);
    if (!f.complete()) throw std::runtime_error("integralize: could not factor denominator " + den.get_str());
    for (auto& [q, e] : f.primes) {
      (void)e;
      long need = 0;
      for (auto& [x, wt] : weighted) {
        if (x == 0) continue;
        long o = ord(x, q);
        if (o < 0) need = std::max(need, (-o + wt - 1) / wt);
      }
      for (long i = 0; i < need; ++i) u *= q;
    }
  }
  std::array<Integer, 5> mu = c.mu();
  Integer u2 = u * u;
  Integer scale = 1;
  for (int i = 4; i >= 0; --i) {
    scale *= u2;
    mu[i] *= scale;
  }
  Curve c2(mu);
  Rational U(u);
  Rational b0 = p.b.size() > 0 ? p.b[0] : Rational(0);
  Rational b1 = p.b.size() > 1 ? p.b[1] : Rational(0);
  MumfordPoint q = make_point(c2, p.a[0] * U * U * U * U, p.a[1] * U * U, b0 * U * U * U * U * U, b1 * U * U * U);
  return Integralized{c2, q, u};
}

}  // namespace g2h
