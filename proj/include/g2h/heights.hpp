// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "g2h/divpoly.hpp"

namespace g2h {

struct HeightOptions {
  long n_max = 1000;
  mpfr_prec_t prec_bits = 0;  // 0: chosen from n_max
  int padic_digits = 64;
  int padic_max_digits = 1 << 14;
};

struct PlaceContribution {
  Place place;
  double lambda;  // in units of n_v; the contribution to the height is n_v * lambda
  double weighted() const { return place.local_factor() * lambda; }
};

struct HeightResult {
  double hhat = 0;
  std::vector<PlaceContribution> per_place;
  std::string method;
  long n_used = 0;
  double error_estimate = 0;
  std::vector<std::string> warnings;
};

// The estimate at a single index n together with the index actually used.
struct Estimate {
  long n = 0;
  double value = 0;
};

// Largest n' <= n with n' p off theta.
long last_in_T(const Curve& c, const MumfordPoint& p, long n);

// (1/n^2) log |phi_n(p)|_v at one n in T(p).
double lambda_at(PointContext& ctx, const Place& v, long n, const HeightOptions& opt);

struct LocalLambda {
  double value;
  double error;
  long n_used;
};
LocalLambda local_lambda(const Curve& c, const MumfordPoint& p, const Place& v,
                         std::shared_ptr<const FormulaPack> pack, const HeightOptions& opt);

HeightResult h_S(const Curve& c, const MumfordPoint& p, const std::vector<Place>& S,
                 std::shared_ptr<const FormulaPack> pack, const HeightOptions& opt);

// Places needed by the local method: {q : ord_q(disc) >= 2}, primes where a
// p-coordinate has a denominator, and infinity.
std::vector<Place> local_places(const Curve& c, const MumfordPoint& p);
HeightResult h_local(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                     const HeightOptions& opt);

// Factorisation-free estimate from |E_n| / gcd(E_n, E_{n+1}, E_{n+2}).
double gcd_estimate(PhiSequence<ExactDomain>& seq, const Curve& c, const MumfordPoint& p, long n, long* used = nullptr);
HeightResult h_gcd(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                   const HeightOptions& opt);

std::vector<Place> split_places(const Curve& c, const MumfordPoint& p);
HeightResult h_split(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack,
                     const HeightOptions& opt);

// lambda_v(n p) = n^2 lambda_v(p) - log|phi_n(p)|_v for n in T(p), n <= n_max.
// lambda_v(p) itself is estimated at index max(256 n_max, 1000).
std::vector<std::pair<long, double>> lambda_series(const Curve& c, const MumfordPoint& p, const Place& v,
                                                   std::shared_ptr<const FormulaPack> pack,
                                                   const HeightOptions& opt);

struct TableRow {
  long n;
  double estimate;
  double error;
};
// Estimates at each n in ns (method "local" or "gcd"); error = |estimate - reference|.
// A NaN reference selects the estimate at the largest n.
std::vector<TableRow> convergence_table(const Curve& c, const MumfordPoint& p,
                                        std::shared_ptr<const FormulaPack> pack, const std::string& method,
                                        const std::vector<long>& ns, double reference, const HeightOptions& opt);

// Reference value of the worked example, Theta-normalised.
constexpr const char* kReferenceHeight = "0.905661971737515301104367671719";

}  // namespace g2h
