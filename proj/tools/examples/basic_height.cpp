// SPDX-License-Identifier: MIT
// Height of (1,4) + (-2,-5) on y^2 = x^5 + 5x^4 + 4x^3 + 3x^2 + 2x + 1, two ways.
#include <cstdio>
#include <memory>

#include "g2h/heights.hpp"

int main() {
  using namespace g2h;
  auto pack = std::make_shared<const FormulaPack>(load_pack(default_pack_path()));
  Curve c = Curve::parse("1,2,3,4,5");
  MumfordPoint p = parse_point(c, "(1,4)+(-2,-5)");

  HeightOptions opt;
  opt.n_max = 1000;
  HeightResult local = h_local(c, p, pack, opt);
  std::printf("local, n = %ld: %.12f\n", local.n_used, local.hhat);
  for (auto& pc : local.per_place) std::printf("  %s: %.12f\n", pc.place.str().c_str(), pc.weighted());

  opt.n_max = 100;
  HeightResult g = h_gcd(c, p, pack, opt);  // no factorisation needed
  std::printf("gcd,   n = %ld: %.12f\n", g.n_used, g.hhat);
  std::printf("reference:      %s\n", kReferenceHeight);
  return 0;
}
