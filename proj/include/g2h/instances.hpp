// SPDX-License-Identifier: MIT
#pragma once

#include <random>
#include <string>

#include "g2h/jacobian.hpp"

namespace g2h {

struct Instance {
  std::string name;
  Curve curve;
  MumfordPoint point;
};

// y^2 = x^5 + 5x^4 + 4x^3 + 3x^2 + 2x + 1, p = (1,4) + (-2,-5).
Instance reference_instance();
// Same curve, p = (1,4) + (-2,5); p-coordinates (-1, 2, -2/3, 26/3).
Instance nonintegral_instance();
Instance j1_instance();
Instance j2_instance();
// y^2 = x^5 + 1, p = (0,1) + (-1,0), a torsion point of order 10.
Instance torsion_instance();
// y^2 = x(x-1)(x+1)(x-2)(x+2), p = [(0,0) + (1,0)], a 2-torsion point off theta.
Instance two_torsion_instance();
// 2p on theta (p off theta).
Instance theta2_instance();
// 3p on theta, 2p off theta.
Instance theta3_instance();

// Random nonsingular curve with a point p = (x1,y1) + (x1+1,y2) whose Mumford b is
// integral, gcd(a, b) = 1, p not 2-torsion, and all p-coordinates and MU nonzero.
Instance random_instance(std::mt19937_64& rng, long bound = 6);

}  // namespace g2h
