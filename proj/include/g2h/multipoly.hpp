// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "g2h/numeric.hpp"

namespace g2h {

// Slots 0..3 hold P12, P22, P122, P222 (or X1..X4 for the Kummer quartics),
// slots 4..8 hold MU0..MU4.
constexpr int kVars = 9;
constexpr int kBasis = 4;
using Exponents = std::array<int, kVars>;

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

const std::vector<std::string>& basis_names();
const std::vector<std::string>& projective_names();

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexLess>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(int slot);

  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant(const Rational& c) const;
  int max_exponent(int slot) const;
  int degree() const;

  // Accumulates; drops the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Formal partial derivative in one slot.
  MultiPoly partial(int slot) const;

 private:
  Terms terms_;
};

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names = basis_names());

Rational poly_eval(const MultiPoly& p, const std::array<Rational, kVars>& at);
// Throws std::invalid_argument when a variable occurring in p has no value.
Rational poly_eval(const MultiPoly& p, const std::map<std::string, Rational>& at,
                   const std::vector<std::string>& names = basis_names());

// d_k of each basis column, expressed again in the basis.
struct Derivations {
  std::array<std::array<MultiPoly, kBasis>, 2> table;  // [k-1][slot]
  std::array<std::array<bool, kBasis>, 2> present{};
  const MultiPoly& of(int k, int slot) const { return table[k - 1][slot]; }
};

// Derivation along direction k in {1, 2}; the MU slots are constants.
MultiPoly poly_derive(const MultiPoly& p, int k, const Derivations& d);

// Groups terms by their basis monomial so that the MU part is summed exactly
// once per curve and the remaining evaluation runs in any ring.
class SplitPoly {
 public:
  SplitPoly() = default;
  explicit SplitPoly(const MultiPoly& p);

  struct Specialized {
    std::vector<std::array<int, kBasis>> mono;
    std::vector<Rational> coeff;
    std::array<int, kBasis> max_exp{};
  };
  Specialized specialize(const std::array<Rational, 5>& mu) const;

  // from: Rational -> V. V needs + and *.
  template <class V, class From>
  V eval(const std::array<V, kBasis>& x, const std::array<Rational, 5>& mu, From from) const {
    return eval_specialized(specialize(mu), x, from);
  }

  template <class V, class From>
  static V eval_specialized(const Specialized& s, const std::array<V, kBasis>& x, From from) {
    std::array<std::vector<V>, kBasis> pw;
    for (int v = 0; v < kBasis; ++v) {
      pw[v].push_back(from(Rational(1)));
      for (int e = 1; e <= s.max_exp[v]; ++e) pw[v].push_back(pw[v].back() * x[v]);
    }
    V acc = from(Rational(0));
    for (size_t i = 0; i < s.mono.size(); ++i) {
      V t = from(s.coeff[i]);
      for (int v = 0; v < kBasis; ++v)
        if (s.mono[i][v]) t = t * pw[v][s.mono[i][v]];
      acc = acc + t;
    }
    return acc;
  }

 private:
  struct Group {
    std::array<int, kBasis> e;
    std::vector<std::pair<std::array<int, 5>, Rational>> mu_terms;
  };
  std::vector<Group> groups_;
};

}  // namespace g2h
