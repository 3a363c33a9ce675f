// SPDX-License-Identifier: MIT
#include "g2h/kummer.hpp"

#include <algorithm>
#include <cmath>

namespace g2h {

namespace {

int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
  return idx[a][b];
}

constexpr std::array<std::pair<int, int>, 10> kPairs = {
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

double log_abs_int(const Integer& z) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

KummerPoint KummerPoint::from_rational(const std::array<Rational, 4>& q) {
  Integer den = 1;
  for (auto& v : q) den = lcm(den, Integer(v.get_den()));
  KummerPoint k;
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    Rational s = q[i] * den;
    k.x[i] = s.get_num();
    g = gcd(g, k.x[i]);
  }
  if (g == 0) throw PreconditionError("all Kummer coordinates vanish");
  int sign = 1;
  for (auto& v : k.x)
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  for (auto& v : k.x) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) v = -v;
  }
  return k;
}

std::string KummerPoint::str() const {
  return "(" + x[0].get_str() + " : " + x[1].get_str() + " : " + x[2].get_str() + " : " + x[3].get_str() + ")";
}

std::array<Rational, 4> kappa_affine(const Curve& c, const MumfordPoint& p, const FormulaPack& pack) {
  auto w = wp_coords(p).array();
  std::array<Rational, kVars> at;
  for (int i = 0; i < kBasis; ++i) at[i] = w[i];
  for (int i = 0; i < 5; ++i) at[kBasis + i] = Rational(c.mu()[i]);
  std::array<Rational, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = poly_eval(pack.kappa[i + 1], at);
  return out;
}

KummerPoint kappa(const Curve& c, const MumfordPoint& p, const FormulaPack& pack) {
  if (!is_valid(c, p)) throw PreconditionError("point is not on the Jacobian of the curve");
  if (p.degree() == 0) return KummerPoint::from_rational({0, 0, 0, 1});
  if (p.degree() == 1) {
    Rational x1 = -p.a[0];
    return KummerPoint::from_rational({0, 1, x1, x1 * x1});
  }
  return KummerPoint::from_rational(kappa_affine(c, p, pack));
}

Duplication::Duplication(const Curve& c, const FormulaPack& pack) {
  std::array<Rational, 5> mu;
  for (int i = 0; i < 5; ++i) mu[i] = Rational(c.mu()[i]);
  std::array<SplitPoly::Specialized, 4> s;
  Integer den = 1;
  for (int i = 0; i < 4; ++i) {
    s[i] = SplitPoly(pack.delta[i + 1]).specialize(mu);
    for (auto& q : s[i].coeff) den = lcm(den, Integer(q.get_den()));
  }
  scale_ = Rational(1) / Rational(den);
  for (auto& a : L_)
    for (auto& b : a) b.fill(0);
  for (int i = 0; i < 4; ++i)
    for (size_t t = 0; t < s[i].mono.size(); ++t) {
      std::vector<int> vars;
      for (int v = 0; v < 4; ++v)
        for (int e = 0; e < s[i].mono[t][v]; ++e) vars.push_back(v);
      if (vars.size() != 4) throw std::invalid_argument("delta polynomial is not a homogeneous quartic");
      Rational cq = s[i].coeff[t] * den;
      L_[i][pair_index(vars[0], vars[1])][pair_index(vars[2], vars[3])] += cq.get_num();
    }
}

KummerPoint Duplication::operator()(const KummerPoint& x) const {
  std::array<Integer, 10> Q;
  for (int t = 0; t < 10; ++t) Q[t] = x.x[kPairs[t].first] * x.x[kPairs[t].second];
  std::array<Integer, 4> out;
  Integer lin, term;
  for (int i = 0; i < 4; ++i) {
    out[i] = 0;
    for (int ab = 0; ab < 10; ++ab) {
      lin = 0;
      bool any = false;
      for (int cd = 0; cd < 10; ++cd) {
        const Integer& c = L_[i][ab][cd];
        if (c == 0) continue;
        any = true;
        if (c.fits_slong_p()) {
          mpz_mul_si(term.get_mpz_t(), Q[cd].get_mpz_t(), c.get_si());
          lin += term;
        } else {
          lin += c * Q[cd];
        }
      }
      if (any) out[i] += Q[ab] * lin;
    }
  }
  Integer g = 0;
  // gcd of the smallest pair first; the running gcd shrinks fast.
  std::array<int, 4> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return mpz_sizeinbase(out[a].get_mpz_t(), 2) < mpz_sizeinbase(out[b].get_mpz_t(), 2); });
  for (int i : order) {
    if (out[i] == 0) continue;
    g = gcd(g, out[i]);
    if (g == 1) break;
  }
  if (g == 0) throw PreconditionError("duplication of an invalid Kummer point: all quartics vanish");
  int sign = 1;
  for (auto& v : out)
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  KummerPoint r;
  for (int i = 0; i < 4; ++i) {
    if (g != 1) mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), g.get_mpz_t());
    r.x[i] = sign < 0 ? Integer(-out[i]) : out[i];
  }
  return r;
}

std::array<Rational, 4> Duplication::eval(const std::array<Rational, 4>& x) const {
  std::array<Rational, 10> Q;
  for (int t = 0; t < 10; ++t) Q[t] = x[kPairs[t].first] * x[kPairs[t].second];
  std::array<Rational, 4> out;
  for (int i = 0; i < 4; ++i) {
    Rational acc = 0;
    for (int ab = 0; ab < 10; ++ab)
      for (int cd = 0; cd < 10; ++cd)
        if (L_[i][ab][cd] != 0) acc += Q[ab] * Q[cd] * L_[i][ab][cd];
    out[i] = acc * scale_;
  }
  return out;
}

KummerPoint delta_dup(const KummerPoint& x, const Curve& c, const FormulaPack& pack) {
  return Duplication(c, pack)(x);
}

double fs_local_height(const KummerPoint& x, const Place& v) {
  if (x.on_theta()) throw PreconditionError("point on theta divisor");
  if (v.is_finite()) return static_cast<double>(ord(x.x[0], Integer(std::to_string(v.prime))));
  double m = -INFINITY;
  for (auto& c : x.x)
    if (c != 0) m = std::max(m, log_abs_int(c));
  return m - log_abs_int(x.x[0]);
}

OracleResult duplication_height_oracle(const Curve& c, const MumfordPoint& p, const FormulaPack& pack, int k) {
  if (k < 1) throw std::invalid_argument("oracle needs at least one doubling");
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  Duplication dup(c, pack);
  KummerPoint x = kappa(c, p, pack);
  auto naive = [](const KummerPoint& y) {
    double m = -INFINITY;
    for (auto& v : y.x)
      if (v != 0) m = std::max(m, log_abs_int(v));
    return m;
  };
  OracleResult r{0, naive(x), x};
  for (int j = 1; j <= k; ++j) {
    x = dup(x);
    if (x.on_theta()) throw PreconditionError(std::to_string(1L << j) + "p lies on the theta divisor");
    if (j == k - 1) r.previous = naive(x) / std::pow(4.0, j);
  }
  r.value = naive(x) / std::pow(4.0, k);
  r.last = x;
  return r;
}

}  // namespace g2h
