// SPDX-License-Identifier: MIT
#include "g2h/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace g2h {

namespace {

double log_abs_int(const Integer& z) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

mpfr_prec_t auto_bits(long n, mpfr_prec_t requested) {
  if (requested > 0) return requested;
  long lg = 1;
  while ((1L << lg) < n) ++lg;
  return std::max<mpfr_prec_t>(128, 64 + 16 * lg);
}

// A multiple k*p off theta whose window constants are defined; heights scale by k^2.
struct Prepared {
  MumfordPoint point;
  long k = 1;
  std::shared_ptr<PointContext> ctx;
};

Prepared prepare(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                 std::vector<std::string>* warnings) {
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  Prepared first{p, 1, make_context(c, p, pack)};
  if (first.ctx->uchida_available()) return first;
  for (long k = 2; k <= 12; ++k) {
    MumfordPoint q = scalar_mul(c, k, p);
    if (is_on_theta(q)) continue;
    auto ctx = make_context(c, q, pack);
    if (!ctx->uchida_available()) continue;
    if (warnings) warnings->push_back("window constants undefined at p; using " + std::to_string(k) + "p");
    return Prepared{q, k, ctx};
  }
  if (warnings) warnings->push_back("window constants undefined for p..12p; using the derivative recurrence");
  return first;
}

void add_primes_of_denominators(const MumfordPoint& p, std::set<Integer>& out) {
  for (auto& x : wp_coords(p).array()) {
    if (x.get_den() == 1) continue;
    Factorization f = factor(x.get_den());
    if (!f.complete()) throw PreconditionError("cannot factor the denominator " + x.get_den().get_str());
    for (auto& [q, e] : f.primes) out.insert(q);
  }
}

std::vector<Place> to_places(const std::set<Integer>& primes) {
  std::vector<Place> out{Place::infinity()};
  for (auto& q : primes) {
    if (!q.fits_ulong_p()) throw PreconditionError("prime " + q.get_str() + " exceeds the q-adic engine range");
    out.push_back(Place::finite_at(q.get_ui()));
  }
  return out;
}

double sum_places(PointContext& ctx, const std::vector<Place>& S, long n, const HeightOptions& opt,
                  std::vector<PlaceContribution>* parts) {
  double s = 0;
  for (auto& v : S) {
    double l = lambda_at(ctx, v, n, opt);
    if (parts) parts->push_back({v, l});
    s += v.local_factor() * l;
  }
  return s;
}

}  // namespace

long last_in_T(const Curve& c, const MumfordPoint& p, long n) {
  for (long m = n; m >= 1; --m)
    if (T_membership(c, p, m)) return m;
  throw PreconditionError("no multiple of p up to " + std::to_string(n) + " is off the theta divisor");
}

double lambda_at(PointContext& ctx, const Place& v, long n, const HeightOptions& opt) {
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  if (!v.is_finite()) {
    PhiSequence<RealDomain> seq(std::shared_ptr<PointContext>(&ctx, [](PointContext*) {}),
                                RealDomain{auto_bits(n, opt.prec_bits)});
    BigFloat e = seq.get(n);
    if (e.is_zero()) throw PreconditionError("E_" + std::to_string(n) + " vanishes");
    return e.log_abs().to_double() / n2;
  }
  auto ctx_ref = std::shared_ptr<PointContext>(&ctx, [](PointContext*) {});
  PAdicDomain dom{v.prime, opt.padic_digits, 8};
  long val = with_padic_restart(dom, opt.padic_max_digits, [&](const PAdicDomain& d) {
    PhiSequence<PAdicDomain> seq(ctx_ref, d);
    PAdic e = seq.get(n);
    if (e.is_zero()) throw PrecisionExhausted("E_n is zero to the working q-adic precision");
    return e.valuation();
  });
  return -static_cast<double>(val) / n2;
}

LocalLambda local_lambda(const Curve& c, const MumfordPoint& p, const Place& v,
                         std::shared_ptr<const FormulaPack> pack, const HeightOptions& opt) {
  if (opt.n_max < 1) throw std::invalid_argument("n_max must be positive");
  Prepared pr = prepare(c, p, pack, nullptr);
  double k2 = static_cast<double>(pr.k * pr.k);
  long n1 = last_in_T(c, pr.point, opt.n_max);
  double l1 = lambda_at(*pr.ctx, v, n1, opt) / k2;
  double err = 0;
  if (opt.n_max >= 2) {
    long n0 = last_in_T(c, pr.point, opt.n_max / 2);
    err = std::fabs(l1 - lambda_at(*pr.ctx, v, n0, opt) / k2);
  }
  return {l1, err, n1};
}

HeightResult h_S(const Curve& c, const MumfordPoint& p, const std::vector<Place>& S,
                 std::shared_ptr<const FormulaPack> pack, const HeightOptions& opt) {
  HeightResult r;
  r.method = "S";
  if (S.empty()) return r;
  Prepared pr = prepare(c, p, pack, &r.warnings);
  double k2 = static_cast<double>(pr.k * pr.k);
  long n1 = last_in_T(c, pr.point, opt.n_max);
  std::vector<PlaceContribution> parts;
  r.hhat = sum_places(*pr.ctx, S, n1, opt, &parts) / k2;
  for (auto& pc : parts) r.per_place.push_back({pc.place, pc.lambda / k2});
  if (opt.n_max >= 2) {
    long n0 = last_in_T(c, pr.point, opt.n_max / 2);
    r.error_estimate = std::fabs(r.hhat - sum_places(*pr.ctx, S, n0, opt, nullptr) / k2);
  }
  r.n_used = n1;
  return r;
}

std::vector<Place> local_places(const Curve& c, const MumfordPoint& p) {
  BadPrimes bp = bad_primes(c, FactorMode::full);
  if (!bp.complete()) {
    if (!is_prime(bp.cofactor))
      throw PreconditionError("discriminant cofactor " + bp.cofactor.get_str() +
                              " is not factored and not certified squarefree; use the gcd method");
  }
  std::set<Integer> primes;
  for (auto& [q, e] : bp.primes)
    if (e >= 2) primes.insert(q);
  add_primes_of_denominators(p, primes);
  return to_places(primes);
}

HeightResult h_local(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                     const HeightOptions& opt) {
  std::vector<std::string> warnings;
  Prepared pr = prepare(c, p, pack, &warnings);
  HeightResult r = h_S(c, pr.point, local_places(c, pr.point), pack, opt);
  double k2 = static_cast<double>(pr.k * pr.k);
  r.hhat /= k2;
  r.error_estimate /= k2;
  for (auto& pc : r.per_place) pc.lambda /= k2;
  r.method = "local";
  r.warnings.insert(r.warnings.begin(), warnings.begin(), warnings.end());
  return r;
}

double gcd_estimate(PhiSequence<ExactDomain>& seq, const Curve& c, const MumfordPoint& p, long n, long* used) {
  for (;; ++n) {
    if (!T_membership(c, p, n)) continue;
    Rational e0 = seq.get(n), e1 = seq.get(n + 1), e2 = seq.get(n + 2);
    if (e1 == 0 || e2 == 0) continue;
    for (auto* e : {&e0, &e1, &e2})
      if (e->get_den() != 1)
        throw PreconditionError("E_" + std::to_string(n) + " window is not integral although the point is: " +
                                "counterexample to the integrality conjecture, denominator " +
                                e->get_den().get_str());
    Integer g = gcd(gcd(e0.get_num(), e1.get_num()), e2.get_num());
    if (used) *used = n;
    double n2 = static_cast<double>(n) * static_cast<double>(n);
    return (log_abs_int(e0.get_num()) - log_abs_int(g)) / n2;
  }
}

HeightResult h_gcd(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                   const HeightOptions& opt) {
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  for (auto& x : wp_coords(p).array())
    if (x.get_den() != 1) throw PreconditionError("p-coordinates are not integral; integralize the model first");
  // gcd(a, b) = 1: b does not vanish at a root of a.
  if (p.b.empty()) throw PreconditionError("gcd(a, b) != 1: p has a Weierstrass component");
  if (p.b.size() == 2) {
    Rational r = -p.b[0] / p.b[1];
    if (r * r + p.a[1] * r + p.a[0] == 0) throw PreconditionError("gcd(a, b) != 1: p has a Weierstrass component");
  }
  if (is_two_torsion(c, p)) throw PreconditionError("p is 2-torsion");
  HeightResult r;
  r.method = "gcd";
  PhiSequence<ExactDomain> seq(make_context(c, p, pack), ExactDomain{});
  long used = 0;
  r.hhat = gcd_estimate(seq, c, p, opt.n_max, &used);
  r.n_used = used;
  if (opt.n_max >= 2) r.error_estimate = std::fabs(r.hhat - gcd_estimate(seq, c, p, opt.n_max / 2));
  return r;
}

std::vector<Place> split_places(const Curve& c, const MumfordPoint& p) {
  BadPrimes bp = bad_primes(c, FactorMode::full);
  if (!bp.complete()) throw PreconditionError("discriminant is not fully factored; use the gcd method");
  std::set<Integer> primes;
  for (auto& [q, e] : bp.primes) primes.insert(q);
  add_primes_of_denominators(p, primes);
  MumfordPoint p2 = add(c, p, p);
  if (is_on_theta(p2)) throw PreconditionError("2p lies on the theta divisor; replace p by a multiple");
  add_primes_of_denominators(p2, primes);
  return to_places(primes);
}

HeightResult h_split(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                     const HeightOptions& opt) {
  std::vector<Place> S = split_places(c, p);
  HeightResult a = h_S(c, p, S, pack, opt);
  HeightResult b = h_S(c, add(c, p, p), S, pack, opt);
  HeightResult r;
  r.method = "split";
  r.hhat = -a.hhat / 3 + b.hhat / 3;
  r.error_estimate = (a.error_estimate + b.error_estimate) / 3;
  r.n_used = a.n_used;
  for (size_t i = 0; i < S.size(); ++i)
    r.per_place.push_back({S[i], (-a.per_place[i].lambda + b.per_place[i].lambda) / 3});
  r.warnings = a.warnings;
  r.warnings.insert(r.warnings.end(), b.warnings.begin(), b.warnings.end());
  return r;
}

std::vector<std::pair<long, double>> lambda_series(const Curve& c, const MumfordPoint& p, const Place& v,
                                                   std::shared_ptr<const FormulaPack> pack,
                                                   const HeightOptions& opt) {
  if (opt.n_max < 1) throw std::invalid_argument("n_max must be positive");
  auto ctx = make_context(c, p, pack);
  // The row error is n^2 times the error in lambda_v(p), so estimate it far past
  // n_max; the descent ladder makes deep indices cheap.
  HeightOptions base = opt;
  base.n_max = std::max(256 * opt.n_max, 1000L);
  double lam = local_lambda(c, p, v, pack, base).value;
  std::vector<long> gaps = gap_scan(c, p, opt.n_max);
  std::set<long> gapset(gaps.begin(), gaps.end());
  std::vector<std::pair<long, double>> out;
  auto push = [&](long n, double log_abs_v) {
    double n2 = static_cast<double>(n) * static_cast<double>(n);
    out.emplace_back(n, n2 * lam - log_abs_v);
  };
  if (!v.is_finite()) {
    PhiSequence<RealDomain> seq(ctx, RealDomain{auto_bits(opt.n_max, opt.prec_bits)});
    for (long n = 1; n <= opt.n_max; ++n) {
      if (gapset.count(n)) continue;
      push(n, seq.get(n).log_abs().to_double());
      seq.forget_below(n / 2 - 8);
    }
    return out;
  }
  return with_padic_restart(PAdicDomain{v.prime, opt.padic_digits, 8}, opt.padic_max_digits,
                            [&](const PAdicDomain& d) {
                              out.clear();
                              PhiSequence<PAdicDomain> seq(ctx, d);
                              for (long n = 1; n <= opt.n_max; ++n) {
                                if (gapset.count(n)) continue;
                                PAdic e = seq.get(n);
                                if (e.is_zero()) throw PrecisionExhausted("E_n zero to working precision");
                                push(n, -static_cast<double>(e.valuation()));
                                seq.forget_below(n / 2 - 8);
                              }
                              return out;
                            });
}

std::vector<TableRow> convergence_table(const Curve& c, const MumfordPoint& p,
                                        std::shared_ptr<const FormulaPack> pack, const std::string& method,
                                        const std::vector<long>& ns, double reference, const HeightOptions& opt) {
  if (ns.empty()) throw UsageError("no table rows (n_max < 10)");
  std::vector<TableRow> rows;
  if (method == "gcd") {
    HeightOptions check = opt;
    check.n_max = 2;
    h_gcd(c, p, pack, check);  // preconditions only
    PhiSequence<ExactDomain> seq(make_context(c, p, pack), ExactDomain{});
    for (long n : ns) rows.push_back({n, gcd_estimate(seq, c, p, n), 0});
  } else if (method == "local") {
    Prepared pr = prepare(c, p, pack, nullptr);
    std::vector<Place> S = local_places(c, pr.point);
    double k2 = static_cast<double>(pr.k * pr.k);
    for (long n : ns) rows.push_back({n, sum_places(*pr.ctx, S, last_in_T(c, pr.point, n), opt, nullptr) / k2, 0});
  } else {
    throw UsageError("table supports the gcd and local methods");
  }
  double ref = std::isnan(reference) ? rows.back().estimate : reference;
  for (auto& r : rows) r.error = std::fabs(r.estimate - ref);
  return rows;
}

}  // namespace g2h
