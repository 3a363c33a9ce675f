// SPDX-License-Identifier: MIT
// Acceptance run: one [PASS]/[FAIL] line per criterion, details indented below it.
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "g2h/heights.hpp"
#include "g2h/instances.hpp"
#include "g2h/kummer.hpp"
#include "g2h/validate.hpp"

using namespace g2h;

namespace {

std::shared_ptr<const FormulaPack> g_pack;
int g_failed = 0;
const double kRef = std::stod(kReferenceHeight);

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void note(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void note(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  std::printf("    ");
  std::vprintf(fmt, ap);
  std::printf("\n");
  std::fflush(stdout);
  va_end(ap);
}

void verdict(int id, bool pass, const std::string& what, double secs, bool gating = true) {
  std::printf("[%s] %d %s (%.1f s)%s\n", pass ? "PASS" : "FAIL", id, what.c_str(), secs, gating ? "" : " [report only]");
  if (!pass && gating) ++g_failed;
  std::fflush(stdout);
}

HeightOptions at(long n) {
  HeightOptions o;
  o.n_max = n;
  return o;
}

void c1() {
  auto t = Clock::now();
  Instance in = reference_instance();
  double e1 = std::fabs(h_local(in.curve, in.point, g_pack, at(1000)).hhat - kRef);
  double e2 = std::fabs(h_local(in.curve, in.point, g_pack, at(25000)).hhat - kRef);
  note("n = 1000: error %.3g (bound 1e-5), n = 25000: error %.3g (bound 5e-8)", e1, e2);
  verdict(1, e1 <= 1e-5 && e2 <= 5e-8, "local method reproduces the worked example", since(t));
}

void c2() {
  auto t = Clock::now();
  Instance in = reference_instance();
  double e100 = std::fabs(h_gcd(in.curve, in.point, g_pack, at(100)).hhat - kRef);
  double e500 = std::fabs(h_gcd(in.curve, in.point, g_pack, at(500)).hhat - kRef);
  note("gcd n = 100: error %.3g (bound 1e-3), n = 500: error %.3g (bound 1e-4)", e100, e500);
  bool ok = e100 <= 1e-3 && e500 <= 1e-4;

  // Expected error columns.
  const std::vector<std::pair<long, double>> gcd_tab = {{10, 3.60e-2},  {100, 4.67e-4}, {200, 1.27e-4},
                                                        {300, 6.92e-5}, {400, 3.49e-5}, {500, 2.45e-5}};
  const std::vector<std::pair<long, double>> loc_tab = {{10, 3.60e-2},    {100, 4.67e-4},   {1000, 4.82e-6},
                                                        {5000, 1.93e-7},  {10000, 5.86e-8}, {15000, 2.26e-8},
                                                        {20000, 1.65e-8}, {25000, 1.21e-8}};
  for (auto& [method, tab] : {std::make_pair(std::string("gcd"), gcd_tab), std::make_pair(std::string("local"), loc_tab)}) {
    std::vector<long> ns;
    for (auto& r : tab) ns.push_back(r.first);
    auto rows = convergence_table(in.curve, in.point, g_pack, method, ns, kRef, at(ns.back()));
    for (size_t i = 0; i < rows.size(); ++i) {
      double ratio = rows[i].error / tab[i].second;
      bool within = ratio >= 0.5 && ratio <= 2;
      ok = ok && within;
      note("%-5s n = %6ld  error %.3g  expected %.3g  ratio %.3f%s", method.c_str(), rows[i].n, rows[i].error,
           tab[i].second, ratio, within ? "" : "  OUTSIDE factor 2");
    }
  }
  verdict(2, ok, "gcd method and error columns", since(t));
}

void c3() {
  auto t = Clock::now();
  Integer d = reference_instance().curve.disc();
  note("disc = %s", d.get_str().c_str());
  verdict(3, d == Integer(256) * 86477, "discriminant 2^8 * 86477", since(t));
}

void c4() {
  auto t = Clock::now();
  auto a = wp_coords(reference_instance().point).array();
  auto b = wp_coords(nonintegral_instance().point).array();
  bool ok = a == std::array<Rational, 4>{-1, 2, 6, 2} &&
            b == std::array<Rational, 4>{-1, 2, Rational(-2, 3), Rational(26, 3)};
  note("(%s, %s, %s, %s) and (%s, %s, %s, %s)", a[0].get_str().c_str(), a[1].get_str().c_str(), a[2].get_str().c_str(),
       a[3].get_str().c_str(), b[0].get_str().c_str(), b[1].get_str().c_str(), b[2].get_str().c_str(),
       b[3].get_str().c_str());
  verdict(4, ok, "p-coordinate quadruples", since(t));
}

void c5() {
  auto t = Clock::now();
  ValidateOptions vo;
  vo.trials = 100;
  vo.v3_curves = 5;
  auto rep = validate_pack(g_pack, vo);
  bool ok = rep.all_pass();
  for (auto& c : rep.checks)
    note("%s: %s on %ld cases%s%s", c.name.c_str(), c.pass ? "pass" : "FAIL", c.cases, c.pass ? "" : ": ",
         c.witness.c_str());

  ValidateOptions mo;
  mo.trials = 6;
  mo.v3_curves = 2;
  mo.v5_random = 1;
  mo.v5_nmax = 20;
  auto muts = mutation_test(*g_pack, 100, 2024, mo);
  std::map<std::string, int> by;
  int missed = 0;
  for (auto& m : muts) {
    if (m.caught) ++by[m.caught_by];
    else {
      ++missed;
      note("mutation in %s term %zu NOT caught", m.section.c_str(), m.term);
    }
  }
  std::string tally;
  for (auto& [k, v] : by) tally += " " + k + ":" + std::to_string(v);
  note("mutations: %zu sampled, %d missed; caught by%s", muts.size(), missed, tally.c_str());
  verdict(5, ok && missed == 0, "pack validation gates and mutation sample", since(t));
}

void c6() {
  auto t = Clock::now();
  std::mt19937_64 rng(606);
  int bad = 0, zeros = 0;
  std::vector<Instance> cases;
  for (int i = 0; i < 20; ++i) cases.push_back(random_instance(rng, 5));
  for (auto& in : cases) {
    PhiSequence<ExactDomain> seq(make_context(in.curve, in.point, g_pack), ExactDomain{});
    auto gaps = gap_scan(in.curve, in.point, 200);
    std::set<long> g(gaps.begin(), gaps.end());
    for (long n = 1; n <= 200; ++n) {
      bool zero = seq.get(n) == 0;
      zeros += zero;
      if (zero != (g.count(n) > 0)) {
        if (++bad <= 3) note("mismatch at n = %ld on %s %s", n, in.curve.str().c_str(), to_string(in.point).c_str());
      }
    }
  }
  note("20 random instances, n <= 200: %d zeros, %d mismatches", zeros, bad);
  // The random draws rarely meet theta; constructed points exercise the zero side.
  int extra_zeros = 0;
  for (auto in : {theta2_instance(), theta3_instance(), torsion_instance()}) {
    PhiSequence<ExactDomain> seq(make_context(in.curve, in.point, g_pack), ExactDomain{});
    MumfordPoint q = identity();
    for (long n = 1; n <= 200; ++n) {
      q = add(in.curve, q, in.point);
      bool zero = seq.get(n) == 0;
      extra_zeros += zero;
      if (zero != is_on_theta(q)) {
        ++bad;
        note("mismatch at n = %ld on %s", n, in.name.c_str());
      }
    }
  }
  note("constructed instances (theta2, theta3, torsion10): %d zeros", extra_zeros);
  verdict(6, bad == 0, "zero locus E_n = 0 iff n outside T(p)", since(t));
}

void c7() {
  auto t = Clock::now();
  std::mt19937_64 rng(707);
  int triples = 0, total_gaps = 0;
  for (int i = 0; i < 50; ++i) {
    Instance in = random_instance(rng, 5);
    auto g = gap_scan(in.curve, in.point, 2000);
    total_gaps += static_cast<int>(g.size());
    for (size_t j = 2; j < g.size(); ++j)
      if (g[j] == g[j - 1] + 1 && g[j - 1] == g[j - 2] + 1) {
        ++triples;
        note("three consecutive gaps ending at %ld on %s", g[j], in.curve.str().c_str());
      }
  }
  note("50 random instances to 2000: %d gaps, %d runs of three", total_gaps, triples);
  Instance tt = two_torsion_instance();
  auto g = gap_scan(tt.curve, tt.point, 2000);
  bool recur = g.size() == 1000 && g.back() == 2000;
  note("2-torsion instance: %zu gaps up to 2000, last %ld", g.size(), g.empty() ? 0L : g.back());
  verdict(7, triples == 0 && recur, "gap lemma", since(t));
}

// Reference and nonintegral first, then random draws with 2p off theta and a
// discriminant that trial division factors.
Instance next_instance(std::mt19937_64& rng) {
  for (;;) {
    Instance in = random_instance(rng, 4);
    if (!is_on_theta(add(in.curve, in.point, in.point)) && bad_primes(in.curve, FactorMode::threshold).complete())
      return in;
  }
}

std::vector<Instance> height_instances(std::uint64_t seed, int count) {
  std::vector<Instance> out = {reference_instance(), nonintegral_instance()};
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) out.push_back(next_instance(rng));
  return out;
}

void c8() {
  auto t = Clock::now();
  int theta = 0, two_theta = 0, both = 0, neither = 0, skipped = 0;
  std::vector<Instance> cases = {reference_instance(), nonintegral_instance()};
  std::mt19937_64 rng(808);
  for (size_t i = 0; i < 10; ++i) {
    if (i >= cases.size()) cases.push_back(next_instance(rng));
    const Instance& in = cases[i];
    auto t0 = Clock::now();
    double o;
    try {
      o = duplication_height_oracle(in.curve, in.point, *g_pack, 12).value;
    } catch (const PreconditionError& e) {
      // some 2^j p hit theta; the Kummer chain cannot be normalised there
      note("%-11s skipped: %s", in.name.c_str(), e.what());
      ++skipped;
      cases.erase(cases.begin() + static_cast<long>(i--));
      continue;
    }
    double h = h_local(in.curve, in.point, g_pack, at(1000)).hhat;
    bool a = std::fabs(2 * h - o) <= 1e-3, b = std::fabs(h - o) <= 1e-3;
    two_theta += a && !b;
    theta += b && !a;
    both += a && b;
    neither += !a && !b;
    note("%-11s h_local %.9f  oracle %.9f  |2h - o| %.2g  |h - o| %.2g  (%.1f s)", in.name.c_str(), h, o,
         std::fabs(2 * h - o), std::fabs(h - o), since(t0));
  }
  bool ok = both == 0 && neither == 0 && (theta == 0 || two_theta == 0);
  note("branch: %s (2-theta %d, theta %d, both %d, neither %d, skipped draws %d)",
       two_theta == 10 ? "oracle = 2 h, the reference value is theta-normalised" : "inconsistent", two_theta, theta,
       both, neither, skipped);
  verdict(8, ok, "doubling oracle agrees on a constant branch", since(t));
}

void c9() {
  auto t = Clock::now();
  bool ok = true;
  for (auto& in : height_instances(909, 10)) {
    HeightResult r1 = h_local(in.curve, in.point, g_pack, at(1000));
    HeightResult r2 = h_local(in.curve, add(in.curve, in.point, in.point), g_pack, at(1000));
    double diff = std::fabs(r2.hhat - 4 * r1.hhat);
    double bound = r2.error_estimate + 4 * r1.error_estimate;
    ok = ok && diff <= bound;
    note("%-11s h(p) %.9f  |h(2p) - 4h(p)| %.2g  combined estimate %.2g%s", in.name.c_str(), r1.hhat, diff, bound,
         diff <= bound ? "" : "  EXCEEDS");
  }
  Instance tor = torsion_instance();
  HeightResult rt = h_local(tor.curve, tor.point, g_pack, at(1000));
  bool tor_ok = std::fabs(rt.hhat) <= rt.error_estimate;
  note("torsion10: h %.3g, error estimate %.3g", rt.hhat, rt.error_estimate);
  verdict(9, ok && tor_ok, "quadraticity and torsion", since(t));
}

void c10() {
  auto t = Clock::now();
  Instance j1 = j1_instance();
  auto s = lambda_series(j1.curve, j1.point, Place::infinity(), g_pack, at(15000));
  // Upper envelope per dyadic block, then a least-squares line in log n.
  std::vector<std::pair<double, double>> env;
  for (long lo = 1; lo <= 15000; lo *= 2) {
    double best = -1e300, at_n = 0;
    for (auto& [n, l] : s)
      if (n >= lo && n < 2 * lo && l > best) best = l, at_n = static_cast<double>(n);
    if (best > -1e300) env.emplace_back(std::log(at_n), best);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = static_cast<double>(env.size());
  for (auto& [x, y] : env) sx += x, sy += y, sxx += x * x, sxy += x * y;
  double B = (m * sxy - sx * sy) / (m * sxx - sx * sx), A = (sy - B * sx) / m;
  double resid = 0, over = 0, worst_n = 0;
  for (auto& [x, y] : env)
    if (std::fabs(y - A - B * x) > resid) resid = std::fabs(y - A - B * x), worst_n = std::exp(x);
  std::vector<double> all;
  for (auto& [n, l] : s) all.push_back(l);
  std::nth_element(all.begin(), all.begin() + static_cast<long>(all.size() / 2), all.end());
  for (auto& [n, l] : s) over = std::max(over, l - (A + B * std::log(static_cast<double>(n))));
  note("J1, infinity, %zu rows: envelope fit A = %.3f, B = %.3f, max residual %.3f at n = %.0f, worst excess %.3f",
       s.size(), A, B, resid, worst_n, over);
  note("J1 median lambda %.3f (bulk stays flat, block maxima follow log n)", all[all.size() / 2]);
  bool fig1 = s.size() == 15000 && B >= 0 && resid <= 1.0;

  Instance j2 = j2_instance();
  auto s2 = lambda_series(j2.curve, j2.point, Place::finite_at(2), g_pack, at(15000));
  std::map<long long, int> levels;
  for (auto& [n, l] : s2) ++levels[std::llround(l * 1e3)];
  int big = 0, covered = 0;
  for (auto& [v, c] : levels)
    if (c >= static_cast<int>(s2.size()) / 50) ++big, covered += c;
  // the rows off the big levels should stay under a log n envelope
  double slope = 0;
  for (auto& [n, l] : s2)
    if (levels[std::llround(l * 1e3)] < static_cast<int>(s2.size()) / 50 && n > 1)
      slope = std::max(slope, l / std::log(static_cast<double>(n)));
  note("J2, 2-adic, %zu rows: %zu distinct values (1e-3), %d levels hold %d rows (%.1f%%), sporadic max lambda/log n %.3f",
       s2.size(), levels.size(), big, covered, 100.0 * covered / std::max<size_t>(1, s2.size()), slope);
  bool fig2 = big >= 1 && big <= 20 && covered >= static_cast<int>(s2.size()) * 9 / 10 && slope < 2;
  verdict(10, fig1 && fig2, "qualitative growth of the local series", since(t), false);
}

}  // namespace

// With arguments, only the listed criteria run.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto t = Clock::now();
  g_pack = std::make_shared<const FormulaPack>(load_pack(default_pack_path()));
  std::printf("pack %s loaded in %.2f s\n", default_pack_path().c_str(), since(t));
  std::fflush(stdout);
  int id = 0;
  for (auto f : {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10}) {
    if (++id, !only.empty() && !only.count(id)) continue;
    try {
      f();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
      std::printf("[FAIL] criterion aborted\n");
      ++g_failed;
    }
  }
  std::printf("%d gating criteria failed, %.1f s total\n", g_failed, since(t));
  return g_failed == 0 ? 0 : 1;
}
