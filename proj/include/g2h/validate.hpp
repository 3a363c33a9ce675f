// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "g2h/pack.hpp"

namespace g2h {

struct CheckResult {
  std::string name;  // V1..V5
  bool pass = true;
  long cases = 0;
  std::string witness;  // first failing case
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* first_failure() const;
};

struct ValidateOptions {
  int trials = 25;         // random instances for V1, V2, V4
  int v3_curves = 5;       // instances for Kanayama against Uchida, n = 9..16
  int v5_random = 3;       // random instances for the zero-locus check, besides the constructed ones
  long v5_nmax = 30;
  std::uint64_t seed = 1;
  bool stop_at_first_failure = false;
};

// V1: delta1(kappa/kappa1) = phi2^2. V2: delta(kappa(p)) ~ kappa(2p).
// V3: derivative recurrence and window recurrence agree for n = 9..16, and both
// satisfy phi_mn(p) = phi_m(np) phi_n(p)^(m^2) for mn <= 16.
// V4: d1 d2 = d2 d1 on phi2..phi5 and on the p11 relation, at the point. V5: phi_n(p) = 0 iff np on theta.
ValidationReport validate_pack(std::shared_ptr<const FormulaPack> pack, const ValidateOptions& opt);

struct MutationOutcome {
  std::string section;
  size_t term = 0;
  bool caught = false;
  std::string caught_by;  // check name or "load"
};
// Adds 1 to `samples` pack coefficients, one at a time, and runs the validator on each.
std::vector<MutationOutcome> mutation_test(const FormulaPack& pack, int samples, std::uint64_t seed,
                                           const ValidateOptions& opt);

}  // namespace g2h
