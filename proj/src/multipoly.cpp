// SPDX-License-Identifier: MIT
#include "g2h/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace g2h {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

const std::vector<std::string>& basis_names() {
  static const std::vector<std::string> n = {"P12", "P22", "P122", "P222", "MU0", "MU1", "MU2", "MU3", "MU4"};
  return n;
}

const std::vector<std::string>& projective_names() {
  static const std::vector<std::string> n = {"X1", "X2", "X3", "X4", "MU0", "MU1", "MU2", "MU3", "MU4"};
  return n;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term(Exponents{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int slot) {
  MultiPoly p;
  Exponents e{};
  e.at(slot) = 1;
  p.add_term(e, 1);
  return p;
}

bool MultiPoly::is_constant(const Rational& c) const {
  if (c == 0) return terms_.empty();
  return terms_.size() == 1 && terms_.begin()->first == Exponents{} && terms_.begin()->second == c;
}

int MultiPoly::max_exponent(int slot) const {
  int m = 0;
  for (auto& [e, c] : terms_) m = std::max(m, e[slot]);
  return m;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_ = a.terms_;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MultiPoly MultiPoly::partial(int slot) const {
  MultiPoly r;
  for (auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    --d[slot];
    r.add_term(d, c * e[slot]);
  }
  return r;
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit = (c == 1 || c == -1) && e != Exponents{};
    if (s.empty()) s += (c < 0 ? "-" : "");
    else s += (c < 0 ? " - " : " + ");
    bool first = true;
    if (!unit) {
      s += Rational(abs(c)).get_str();
      first = false;
    }
    for (int i = 0; i < kVars; ++i) {
      if (!e[i]) continue;
      if (!first) s += "*";
      s += names[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
      first = false;
    }
  }
  return s;
}

Rational poly_eval(const MultiPoly& p, const std::array<Rational, kVars>& at) {
  std::array<std::vector<Rational>, kVars> pw;
  for (int v = 0; v < kVars; ++v) {
    pw[v].push_back(1);
    for (int e = 1; e <= p.max_exponent(v); ++e) pw[v].push_back(pw[v].back() * at[v]);
  }
  Rational acc = 0;
  for (auto& [e, c] : p.terms()) {
    Rational t = c;
    for (int v = 0; v < kVars; ++v)
      if (e[v]) t *= pw[v][e[v]];
    acc += t;
  }
  return acc;
}

Rational poly_eval(const MultiPoly& p, const std::map<std::string, Rational>& at,
                   const std::vector<std::string>& names) {
  std::array<Rational, kVars> v;
  for (int i = 0; i < kVars; ++i) {
    auto it = at.find(names[i]);
    if (it != at.end()) {
      v[i] = it->second;
    } else if (p.max_exponent(i) > 0) {
      throw std::invalid_argument("missing assignment for " + names[i]);
    }
  }
  return poly_eval(p, v);
}

MultiPoly poly_derive(const MultiPoly& p, int k, const Derivations& d) {
  if (k != 1 && k != 2) throw std::invalid_argument("derivation direction must be 1 or 2");
  MultiPoly r;
  for (int v = 0; v < kBasis; ++v) {
    MultiPoly dv = p.partial(v);
    if (dv.is_zero()) continue;
    if (!d.present[k - 1][v]) throw std::invalid_argument("missing derivation entry d" + std::to_string(k) + "_" + basis_names()[v]);
    r += dv * d.of(k, v);
  }
  return r;
}

SplitPoly::SplitPoly(const MultiPoly& p) {
  std::map<std::array<int, kBasis>, size_t> index;
  for (auto& [e, c] : p.terms()) {
    std::array<int, kBasis> b;
    std::array<int, 5> m;
    std::copy(e.begin(), e.begin() + kBasis, b.begin());
    std::copy(e.begin() + kBasis, e.end(), m.begin());
    auto [it, inserted] = index.emplace(b, groups_.size());
    if (inserted) groups_.push_back(Group{b, {}});
    groups_[it->second].mu_terms.emplace_back(m, c);
  }
}

SplitPoly::Specialized SplitPoly::specialize(const std::array<Rational, 5>& mu) const {
  std::array<int, 5> maxe{};
  for (auto& g : groups_)
    for (auto& [m, c] : g.mu_terms)
      for (int i = 0; i < 5; ++i) maxe[i] = std::max(maxe[i], m[i]);
  std::array<std::vector<Rational>, 5> pw;
  for (int i = 0; i < 5; ++i) {
    pw[i].push_back(1);
    for (int e = 1; e <= maxe[i]; ++e) pw[i].push_back(pw[i].back() * mu[i]);
  }
  Specialized s;
  for (auto& g : groups_) {
    Rational acc = 0;
    for (auto& [m, c] : g.mu_terms) {
      Rational t = c;
      for (int i = 0; i < 5; ++i)
        if (m[i]) t *= pw[i][m[i]];
      acc += t;
    }
    if (acc == 0) continue;
    s.mono.push_back(g.e);
    s.coeff.push_back(acc);
    for (int v = 0; v < kBasis; ++v) s.max_exp[v] = std::max(s.max_exp[v], g.e[v]);
  }
  return s;
}

}  // namespace g2h
