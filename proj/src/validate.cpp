// SPDX-License-Identifier: MIT
#include "g2h/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "g2h/divpoly.hpp"
#include "g2h/instances.hpp"
#include "g2h/kummer.hpp"

namespace g2h {

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::first_failure() const {
  for (auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

std::string describe(const Instance& in) { return "curve " + in.curve.str() + ", point " + to_string(in.point); }

// Runs body over cases; the first false return or exception becomes the witness.
CheckResult run_check(const std::string& name, const std::vector<Instance>& cases,
                      const std::function<std::string(const Instance&)>& body) {
  CheckResult r;
  r.name = name;
  for (auto& in : cases) {
    ++r.cases;
    std::string why;
    try {
      why = body(in);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      r.pass = false;
      r.witness = describe(in) + ": " + why;
      break;
    }
  }
  return r;
}

std::vector<Instance> random_cases(std::mt19937_64& rng, int n) {
  std::vector<Instance> out;
  for (int i = 0; i < n; ++i) out.push_back(random_instance(rng, 5));
  return out;
}

}  // namespace

ValidationReport validate_pack(std::shared_ptr<const FormulaPack> pack, const ValidateOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<Instance> trials = random_cases(rng, opt.trials);
  trials.insert(trials.begin(), reference_instance());
  std::vector<Instance> v3cases = random_cases(rng, std::max(0, opt.v3_curves - 1));
  v3cases.insert(v3cases.begin(), reference_instance());
  std::vector<Instance> v5cases = {theta2_instance(), theta3_instance(), torsion_instance(), two_torsion_instance(),
                                   reference_instance()};
  for (auto& in : random_cases(rng, opt.v5_random)) v5cases.push_back(in);

  std::map<std::string, CheckResult> done;
  bool failed = false;
  auto run = [&](const std::string& name, const std::vector<Instance>& cases,
                 const std::function<std::string(const Instance&)>& body) {
    if (failed && opt.stop_at_first_failure) return;
    done[name] = run_check(name, cases, body);
    failed = failed || !done[name].pass;
  };

  run("V1", trials, [&](const Instance& in) -> std::string {
    auto ctx = make_context(in.curve, in.point, pack);
    auto k = kappa_affine(in.curve, in.point, *pack);
    if (k[0] == 0) return "kappa1 vanishes off theta";
    for (int i = 1; i < 4; ++i) k[i] /= k[0];
    k[0] = 1;
    Rational lhs = Duplication(in.curve, *pack).eval(k)[0];
    Rational e2 = ctx->seed(2);
    if (lhs != e2 * e2) return "delta1(kappa/kappa1) = " + lhs.get_str() + " but phi2^2 = " + Rational(e2 * e2).get_str();
    return "";
  });

  run("V2", trials, [&](const Instance& in) -> std::string {
    KummerPoint lhs = Duplication(in.curve, *pack)(kappa(in.curve, in.point, *pack));
    KummerPoint rhs = kappa(in.curve, add(in.curve, in.point, in.point), *pack);
    if (!(lhs == rhs)) return "delta(kappa(p)) = " + lhs.str() + " but kappa(2p) = " + rhs.str();
    return "";
  });

  // Commutators of the derivations on the basis columns. Along the derivations
  // P12, P22 and p11 are d1d1, d1d2 and d2d2 of the same potential, so d2 p11 = d1 P22.
  std::array<MultiPoly, kBasis> comm;
  std::array<std::array<MultiPoly, kBasis>, 6> grad;
  std::array<MultiPoly, 3> rel;
  bool ready = false;
  run("V4", trials, [&](const Instance& in) -> std::string {
    if (!ready) {
      for (int v = 0; v < kBasis; ++v)
        comm[v] = poly_derive(pack->deriv.of(2, v), 1, pack->deriv) - poly_derive(pack->deriv.of(1, v), 2, pack->deriv);
      for (int j = 2; j <= 5; ++j)
        for (int v = 0; v < kBasis; ++v) grad[j][v] = pack->phi[j].partial(v);
      rel[0] = poly_derive(pack->rel_p11, 2, pack->deriv) - pack->deriv.of(1, 1);
      rel[1] = poly_derive(pack->rel_p11, 1, pack->deriv) - pack->rel_p111;
      rel[2] = poly_derive(pack->rel_p11, 2, pack->deriv) - pack->rel_p112;
      ready = true;
    }
    std::array<Rational, kVars> at;
    auto w = wp_coords(in.point).array();
    for (int i = 0; i < kBasis; ++i) at[i] = w[i];
    for (int i = 0; i < 5; ++i) at[kBasis + i] = Rational(in.curve.mu()[i]);
    std::array<Rational, kBasis> cv;
    for (int v = 0; v < kBasis; ++v) cv[v] = poly_eval(comm[v], at);
    for (int j = 2; j <= 5; ++j) {
      Rational s = 0;
      for (int v = 0; v < kBasis; ++v)
        if (cv[v] != 0) s += poly_eval(grad[j][v], at) * cv[v];
      if (s != 0) return "(d1 d2 - d2 d1) phi" + std::to_string(j) + " = " + s.get_str();
    }
    const char* what[] = {"d2 p11 - d1 P22", "d1 p11 - p111", "d2 p11 - p112"};
    for (int i = 0; i < 3; ++i) {
      Rational r = poly_eval(rel[i], at);
      if (r != 0) return std::string(what[i]) + " = " + r.get_str();
    }
    return "";
  });

  run("V3", v3cases, [&](const Instance& in) -> std::string {
    auto ctx = make_context(in.curve, in.point, pack);
    if (!ctx->uchida_available()) return "window constants undefined";
    PhiSequence<ExactDomain> seq(ctx, ExactDomain{});
    for (long n = 9; n <= 16; ++n) {
      Rational k = ctx->kanayama_jet(n, 0).value();
      Rational u = seq.get(n);
      if (k != u) return "n = " + std::to_string(n) + ": derivative recurrence " + k.get_str() + ", window recurrence " + u.get_str();
    }
    // Both recurrences share the relation polynomials, so also compare against
    // phi_mn(p) = phi_m(np) phi_n(p)^(m^2), which only uses seeds at np.
    for (long n = 2; n <= 8; ++n) {
      MumfordPoint np = scalar_mul(in.curve, n, in.point);
      if (is_on_theta(np)) continue;
      auto at_np = make_context(in.curve, np, pack);
      for (int m = 2; m <= 5 && m * n <= 16; ++m) {
        Rational rhs = at_np->seed(m), e = seq.get(n);
        for (int i = 0; i < m * m; ++i) rhs *= e;
        if (seq.get(m * n) != rhs)
          return "n = " + std::to_string(m * n) + ": recurrence disagrees with phi_" + std::to_string(m) + "(" +
                 std::to_string(n) + "p) phi_" + std::to_string(n) + "^" + std::to_string(m * m);
      }
    }
    return "";
  });

  run("V5", v5cases, [&](const Instance& in) -> std::string {
    PhiSequence<ExactDomain> seq(make_context(in.curve, in.point, pack), ExactDomain{});
    MumfordPoint q = identity();
    for (long n = 1; n <= opt.v5_nmax; ++n) {
      q = add(in.curve, q, in.point);
      bool zero = seq.get(n) == 0;
      if (zero != is_on_theta(q))
        return "n = " + std::to_string(n) + ": phi_n " + (zero ? "vanishes" : "does not vanish") + " but np is " +
               (is_on_theta(q) ? "on" : "off") + " theta";
    }
    return "";
  });

  ValidationReport rep;
  for (auto& [name, r] : done) rep.checks.push_back(r);
  return rep;
}

std::vector<MutationOutcome> mutation_test(const FormulaPack& pack, int samples, std::uint64_t seed,
                                           const ValidateOptions& opt) {
  std::vector<std::string> names;
  for (int i = 1; i <= 5; ++i) names.push_back("phi" + std::to_string(i));
  for (auto n : {"rel_p11", "rel_p111", "rel_p112"}) names.push_back(n);
  for (int k = 1; k <= 2; ++k)
    for (int v = 0; v < kBasis; ++v) names.push_back("d" + std::to_string(k) + "_" + basis_names()[v]);
  for (int i = 1; i <= 4; ++i) names.push_back("kappa" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) names.push_back("delta" + std::to_string(i));

  auto section = [](FormulaPack& p, const std::string& n) -> MultiPoly& {
    if (n.rfind("phi", 0) == 0) return p.phi[n[3] - '0'];
    if (n == "rel_p11") return p.rel_p11;
    if (n == "rel_p111") return p.rel_p111;
    if (n == "rel_p112") return p.rel_p112;
    if (n.rfind("kappa", 0) == 0) return p.kappa[n[5] - '0'];
    if (n.rfind("delta", 0) == 0) return p.delta[n[5] - '0'];
    int k = n[1] - '0';
    for (int v = 0; v < kBasis; ++v)
      if (n.substr(3) == basis_names()[v]) return p.deriv.table[k - 1][v];
    throw std::logic_error("unknown section " + n);
  };

  std::mt19937_64 rng(seed);
  std::vector<MutationOutcome> out;
  ValidateOptions vo = opt;
  vo.stop_at_first_failure = true;
  for (int s = 0; s < samples; ++s) {
    // Stratified: a section first, then a term inside it.
    const std::string& name = names[rng() % names.size()];
    FormulaPack mutated = pack;
    MultiPoly& poly = section(mutated, name);
    size_t t = rng() % poly.size();
    auto it = poly.terms().begin();
    std::advance(it, static_cast<long>(t));
    poly.add_term(it->first, 1);
    MutationOutcome mo{name, t, false, ""};
    if (!mutated.phi[1].is_constant(1)) {
      mo.caught = true;
      mo.caught_by = "load";
    } else {
      mutated.rebuild_caches();
      auto rep = validate_pack(std::make_shared<const FormulaPack>(std::move(mutated)), vo);
      if (auto* f = rep.first_failure()) {
        mo.caught = true;
        mo.caught_by = f->name;
      }
    }
    out.push_back(mo);
  }
  return out;
}

}  // namespace g2h
