// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "g2h/heights.hpp"
#include "g2h/instances.hpp"

using namespace g2h;

namespace {

std::shared_ptr<const FormulaPack> pack() {
  static auto p = std::make_shared<const FormulaPack>(load_pack(default_pack_path()));
  return p;
}

const double kRef = std::stod(kReferenceHeight);

HeightOptions at(long n) {
  HeightOptions o;
  o.n_max = n;
  return o;
}

}  // namespace

TEST_CASE("local method on the worked example") {
  Instance in = reference_instance();
  auto S = local_places(in.curve, in.point);
  std::sort(S.begin(), S.end());
  CHECK(S == std::vector<Place>{Place::infinity(), Place::finite_at(2)});
  HeightResult r = h_local(in.curve, in.point, pack(), at(1000));
  CHECK(std::fabs(r.hhat - kRef) < 1e-5);
  CHECK(std::fabs(r.hhat - kRef) > 2e-6);  // the truncation error the tables report, not better
  CHECK(r.n_used == 1000);
  CHECK(r.error_estimate > 0);
  double sum = 0;
  for (auto& pc : r.per_place) sum += pc.weighted();
  CHECK(sum == doctest::Approx(r.hhat).epsilon(1e-12));
}

TEST_CASE("gcd method on the worked example") {
  Instance in = reference_instance();
  double e100 = std::fabs(h_gcd(in.curve, in.point, pack(), at(100)).hhat - kRef);
  CHECK(e100 < 1e-3);
  CHECK(e100 == doctest::Approx(4.67e-4).epsilon(0.05));
  CHECK_THROWS_AS(h_gcd(in.curve, nonintegral_instance().point, pack(), at(100)), PreconditionError);
  Instance tt = two_torsion_instance();
  CHECK_THROWS_AS(h_gcd(tt.curve, tt.point, pack(), at(100)), PreconditionError);
}

TEST_CASE("empty place set") {
  Instance in = reference_instance();
  CHECK(h_S(in.curve, in.point, {}, pack(), at(100)).hhat == 0);
}

TEST_CASE("good places contribute nothing") {
  Instance in = reference_instance();
  auto ctx = make_context(in.curve, in.point, pack());
  for (std::uint64_t q : {3, 5, 7}) CHECK(lambda_at(*ctx, Place::finite_at(q), 97, at(97)) == 0);
}

TEST_CASE("methods agree") {
  Instance in = reference_instance();
  double loc = h_local(in.curve, in.point, pack(), at(1000)).hhat;
  double spl = h_split(in.curve, in.point, pack(), at(1000)).hhat;
  double gcd = h_gcd(in.curve, in.point, pack(), at(500)).hhat;
  CHECK(std::fabs(spl - loc) < 1e-5);
  CHECK(std::fabs(gcd - loc) < 1e-4);
}

TEST_CASE("height is a quadratic form") {
  Instance p = reference_instance(), q = nonintegral_instance();
  const Curve& c = p.curve;
  auto h = [&](const MumfordPoint& x) { return h_local(c, x, pack(), at(1000)).hhat; };
  double hp = h(p.point), hq = h(q.point);
  CHECK(h(add(c, p.point, p.point)) == doctest::Approx(4 * hp).epsilon(1e-4));
  CHECK(h(neg(p.point)) == doctest::Approx(hp).epsilon(1e-12));
  // Parallelogram law.
  double lhs = h(add(c, p.point, q.point)) + h(add(c, p.point, neg(q.point)));
  CHECK(lhs == doctest::Approx(2 * hp + 2 * hq).epsilon(1e-4));
}

TEST_CASE("denominators force extra places; the model does not matter") {
  Instance in = nonintegral_instance();
  auto S = local_places(in.curve, in.point);
  CHECK(std::find(S.begin(), S.end(), Place::finite_at(3)) != S.end());
  double loc = h_local(in.curve, in.point, pack(), at(1000)).hhat;
  auto iz = integralize(in.curve, in.point);
  double gcd = h_gcd(iz.curve, iz.point, pack(), at(300)).hhat;
  CHECK(std::fabs(loc - gcd) < 1e-3);
  double loc2 = h_local(iz.curve, iz.point, pack(), at(1000)).hhat;
  CHECK(std::fabs(loc - loc2) < 1e-4);
}

TEST_CASE("torsion has height zero") {
  Instance t = torsion_instance();
  HeightResult r = h_local(t.curve, t.point, pack(), at(1000));
  CHECK(std::fabs(r.hhat) < 1e-3);
}

TEST_CASE("series") {
  Instance in = reference_instance();
  auto one = lambda_series(in.curve, in.point, Place::infinity(), pack(), at(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == 1);
  CHECK(one[0].second == doctest::Approx(local_lambda(in.curve, in.point, Place::infinity(), pack(), at(1000)).value));
  auto s = lambda_series(in.curve, in.point, Place::finite_at(2), pack(), at(200));
  CHECK(s.size() == 200);
  // rows against lambda_v computed directly at np
  for (Place v : {Place::infinity(), Place::finite_at(2)}) {
    auto rows = lambda_series(in.curve, in.point, v, pack(), at(400));
    for (long n : {2L, 3L, 5L, 7L, 12L}) {
      MumfordPoint np = scalar_mul(in.curve, n, in.point);
      double direct = local_lambda(in.curve, np, v, pack(), at(1000)).value;
      CHECK(rows[n - 1].second == doctest::Approx(direct).epsilon(1e-4));
    }
  }
  Instance t = torsion_instance();
  auto st = lambda_series(t.curve, t.point, Place::infinity(), pack(), at(40));
  for (auto& [n, l] : st) CHECK(T_membership(t.curve, t.point, n));
}

TEST_CASE("convergence table") {
  Instance in = reference_instance();
  auto rows = convergence_table(in.curve, in.point, pack(), "gcd", {10, 100, 200, 300, 400, 500}, kRef, at(500));
  REQUIRE(rows.size() == 6);
  const double paper[] = {0, 4.67e-4, 0, 0, 0, 2.45e-5};
  CHECK(rows[1].error == doctest::Approx(paper[1]).epsilon(0.05));
  CHECK(rows[5].error == doctest::Approx(paper[5]).epsilon(0.05));
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].error < rows[i - 1].error);
  CHECK_THROWS_AS(convergence_table(in.curve, in.point, pack(), "gcd", {}, kRef, at(5)), UsageError);
  CHECK_THROWS_AS(convergence_table(in.curve, in.point, pack(), "oracle", {10}, kRef, at(10)), UsageError);
}
