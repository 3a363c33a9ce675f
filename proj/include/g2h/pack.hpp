// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "g2h/exprtree.hpp"
#include "g2h/multipoly.hpp"

namespace g2h {

// Target index n = a*m + b for pivot m.
struct Recurrence {
  std::string name;
  int a = 2;
  int b = 0;
  ExprNode expr;
  std::vector<int> offsets;  // sorted distinct PHI offsets
  int derivative_order = 0;

  // Pivot with a*m + b == n, or -1.
  long pivot_for(long n) const;
};

struct Define {
  std::string name;
  ExprNode expr;
};

struct FormulaPack {
  std::string version;
  std::string source;
  std::array<MultiPoly, 6> phi;  // phi[1..5]
  MultiPoly rel_p11, rel_p111, rel_p112;
  Derivations deriv;
  std::array<MultiPoly, 5> kappa;  // kappa[1..4]
  std::array<MultiPoly, 5> delta;  // delta[1..4], slots X1..X4 and MU
  std::vector<Define> defines;     // in dependency order
  Recurrence kanayama_odd, kanayama_even, uchida_odd, uchida_even;
  std::map<std::string, MultiPoly> extra;  // POLY sections the engine does not consume

  // Evaluation caches built at load time.
  std::array<SplitPoly, 6> phi_split;
  std::map<std::string, SplitPoly> rel_split;  // rel_p11, rel_p111, rel_p112
  std::array<std::array<SplitPoly, kBasis>, 2> deriv_split;
  std::array<SplitPoly, 5> kappa_split;

  void rebuild_caches();
  // Sorted canonical serialization.
  std::string serialize() const;
};

FormulaPack parse_pack(std::istream& in, const std::string& source = "<pack>");
FormulaPack load_pack(const std::string& path);
// Compile-time default pack location.
std::string default_pack_path();

}  // namespace g2h
