// SPDX-License-Identifier: MIT
// g2h: canonical heights on genus-2 Jacobians from the command line.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "g2h/heights.hpp"
#include "g2h/instances.hpp"
#include "g2h/kummer.hpp"
#include "g2h/validate.hpp"

using namespace g2h;

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, precondition = 3, precision = 4 };

struct RunConfig {
  std::string curve = "1,2,3,4,5";
  std::string point = "(1,4)+(-2,-5)";
  std::string method;  // empty: chosen from the discriminant
  long n_max = 1000;
  std::string place = "inf";
  long prec_bits = 0;
  int prec_padic = 64;
  std::string pack = default_pack_path();
  std::string format = "text";
  std::uint64_t seed = 1;
  double reference = std::numeric_limits<double>::quiet_NaN();
};

std::string num(double x, int digits = 16) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::shared_ptr<const FormulaPack> open_pack(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("pack file not found: " + path);
  return std::make_shared<const FormulaPack>(load_pack(path));
}

HeightOptions height_options(const RunConfig& cfg) {
  HeightOptions o;
  o.n_max = cfg.n_max;
  o.prec_bits = cfg.prec_bits;
  o.padic_digits = cfg.prec_padic;
  return o;
}

Place parse_place(const std::string& s) {
  if (s == "inf" || s == "infinity") return Place::infinity();
  Integer q;
  if (q.set_str(s, 10) != 0 || q < 2 || !is_prime(q) || !q.fits_ulong_p())
    throw UsageError("--place must be 'inf' or a prime, got '" + s + "'");
  return Place::finite_at(q.get_ui());
}

void warn_all(const std::vector<std::string>& w) {
  for (auto& s : w) std::cerr << "warning: " << s << "\n";
}

int cmd_height(const RunConfig& cfg) {
  if (cfg.n_max < 10) throw UsageError("--nmax must be at least 10");
  auto pack = open_pack(cfg.pack);
  Curve c = Curve::parse(cfg.curve);
  MumfordPoint p = parse_point(c, cfg.point);
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  std::string method = cfg.method;
  if (method.empty()) method = bad_primes(c, FactorMode::threshold).complete() ? "local" : "gcd";

  HeightOptions opt = height_options(cfg);
  HeightResult r;
  if (method == "local") {
    r = h_local(c, p, pack, opt);
  } else if (method == "gcd") {
    r = h_gcd(c, p, pack, opt);
  } else if (method == "split") {
    r = h_split(c, p, pack, opt);
  } else if (method == "oracle") {
    // The doubling limit gives twice the theta-normalised height.
    OracleResult o = duplication_height_oracle(c, p, *pack);
    r.method = "oracle";
    r.hhat = o.value / 2;
    r.n_used = 1L << 12;
    r.error_estimate = std::fabs(o.value - o.previous) / 2;
    r.warnings.push_back("oracle value halved: the doubling limit is 2-theta normalised");
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  warn_all(r.warnings);

  if (cfg.format == "csv") {
    std::cout << "place,lambda,contribution\n";
    for (auto& pc : r.per_place) std::cout << pc.place.str() << "," << num(pc.lambda) << "," << num(pc.weighted()) << "\n";
    std::cout << "total,," << num(r.hhat) << "\n";
  } else {
    std::cout << "hhat           " << num(r.hhat) << "\n";
    std::cout << "method         " << r.method << "\n";
    std::cout << "n              " << r.n_used << "\n";
    std::cout << "error estimate " << num(r.error_estimate, 3) << "\n";
    for (auto& pc : r.per_place)
      std::cout << "  place " << pc.place.str() << "  lambda " << num(pc.lambda) << "  contribution " << num(pc.weighted())
                << "\n";
  }
  return ok;
}

int cmd_series(const RunConfig& cfg) {
  if (cfg.n_max < 1) throw UsageError("--nmax must be positive");
  auto pack = open_pack(cfg.pack);
  Curve c = Curve::parse(cfg.curve);
  MumfordPoint p = parse_point(c, cfg.point);
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  auto rows = lambda_series(c, p, parse_place(cfg.place), pack, height_options(cfg));
  const char* sep = cfg.format == "csv" ? "," : " ";
  std::cout << "n" << sep << "lambda\n";
  for (auto& [n, l] : rows) std::cout << n << sep << num(l) << "\n";
  return ok;
}

std::vector<long> table_rows(const std::string& method, long n_max) {
  std::vector<long> ns;
  auto push = [&](long n) {
    if (n <= n_max) ns.push_back(n);
  };
  push(10);
  if (method == "gcd") {
    for (long n = 100; n <= n_max; n += 100) push(n);
  } else {
    push(100);
    push(1000);
    for (long n = 5000; n <= n_max; n += 5000) push(n);
  }
  return ns;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.n_max < 10) throw UsageError("no table rows (n_max < 10)");
  auto pack = open_pack(cfg.pack);
  Curve c = Curve::parse(cfg.curve);
  MumfordPoint p = parse_point(c, cfg.point);
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  std::string method = cfg.method;
  if (method.empty()) method = bad_primes(c, FactorMode::threshold).complete() ? "local" : "gcd";
  if (method != "gcd" && method != "local") throw UsageError("table supports the gcd and local methods");
  auto rows = convergence_table(c, p, pack, method, table_rows(method, cfg.n_max), cfg.reference, height_options(cfg));
  if (cfg.format == "csv") {
    std::cout << "n,estimate,error\n";
    for (auto& r : rows) std::cout << r.n << "," << num(r.estimate) << "," << num(r.error, 3) << "\n";
  } else {
    std::printf("%8s  %-20s  %s\n", "n", "estimate", "error");
    for (auto& r : rows) std::printf("%8ld  %-20s  %s\n", r.n, num(r.estimate).c_str(), num(r.error, 3).c_str());
  }
  return ok;
}

// Validation gates plus a few height identities that need no reference value.
int cmd_selftest(const RunConfig& cfg) {
  auto pack = open_pack(cfg.pack);
  ValidateOptions vo;
  vo.seed = cfg.seed;
  auto rep = validate_pack(pack, vo);
  bool all = true;
  for (auto& ch : rep.checks) {
    std::cout << (ch.pass ? "[PASS] " : "[FAIL] ") << ch.name << " (" << ch.cases << " cases)";
    if (!ch.pass) std::cout << ": " << ch.witness;
    std::cout << "\n";
    all = all && ch.pass;
  }

  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
    all = all && pass;
  };
  HeightOptions opt;
  opt.n_max = 200;
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 3; ++i) {
    Instance in = i == 0 ? reference_instance() : random_instance(rng, 5);
    try {
      double h1 = h_local(in.curve, in.point, pack, opt).hhat;
      double hn = h_local(in.curve, neg(in.point), pack, opt).hhat;
      MumfordPoint p2 = add(in.curve, in.point, in.point);
      double h2 = is_on_theta(p2) ? 4 * h1 : h_local(in.curve, p2, pack, opt).hhat;
      report("symmetry " + std::to_string(i), std::fabs(h1 - hn) < 1e-9, num(h1) + " vs " + num(hn));
      report("quadratic " + std::to_string(i), std::fabs(h2 - 4 * h1) < 1e-2 * std::max(1.0, h1),
             num(h2) + " vs 4*" + num(h1));
      report("positive " + std::to_string(i), h1 > 0, num(h1));
    } catch (const std::exception& e) {
      report("heights " + std::to_string(i), false, e.what());
    }
  }
  return all ? ok : failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical heights on Jacobians of genus-2 curves y^2 = x^5 + ..."};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--curve", cfg.curve, "mu0,mu1,mu2,mu3,mu4");
    sub->add_option("--point", cfg.point, "\"(x1,y1)+(x2,y2)\" or \"a0,a1;b0,b1\"");
    sub->add_option("--nmax", cfg.n_max, "largest index n");
    sub->add_option("--prec-bits", cfg.prec_bits, "real working precision (0: automatic)");
    sub->add_option("--prec-padic", cfg.prec_padic, "initial q-adic digits");
    sub->add_option("--pack", cfg.pack, "formula pack");
    sub->add_option("--format", cfg.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    sub->add_option("--seed", cfg.seed, "random seed");
  };
  auto* height = app.add_subcommand("height", "canonical height of a point");
  common(height);
  height->add_option("--method", cfg.method, "gcd, local, split or oracle")
      ->check(CLI::IsMember({"gcd", "local", "split", "oracle"}));
  auto* series = app.add_subcommand("series", "lambda_v(np) for n in T(p), as CSV");
  common(series);
  series->add_option("--place", cfg.place, "inf or a prime");
  auto* table = app.add_subcommand("table", "convergence table");
  common(table);
  table->add_option("--method", cfg.method, "gcd or local")->check(CLI::IsMember({"gcd", "local"}));
  table->add_option("--reference", cfg.reference, "reference height (default: deepest estimate)");
  auto* selftest = app.add_subcommand("selftest", "validate the formula pack and basic height identities");
  selftest->add_option("--pack", cfg.pack, "formula pack");
  selftest->add_option("--seed", cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*height) return cmd_height(cfg);
    if (*series) return cmd_series(cfg);
    if (*table) return cmd_table(cfg);
    return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return precondition;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return precision;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
}
