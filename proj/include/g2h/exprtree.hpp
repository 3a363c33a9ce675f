// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "g2h/numeric.hpp"

namespace g2h {

// Prefix expression over the recurrence window. Leaves:
//   n            rational constant
//   (PHI k)      phi_{m+k} for pivot m
//   (DPHI k d r) r-th derivative along direction d of phi_{m+k}
//   (DMIX k r s) d1^r d2^s phi_{m+k}
//   (SEED j)     phi_j at the point, (DSEED j r s) its d1^r d2^s derivative
//   (VAR name)   basis column or relation polynomial at the point
//   (REF name)   a DEFINE constant
//   (PIVOT)      m
struct ExprNode {
  enum class Op { num, phi, dmix, seed, dseed, var, ref, pivot, add, sub, mul, div, pow, neg };
  Op op = Op::num;
  Rational value;      // num
  int k = 0;           // phi/dmix offset, seed index, pow exponent
  int r1 = 0, r2 = 0;  // derivative orders
  std::string name;    // var/ref
  std::vector<ExprNode> kids;

  bool touches_window() const;  // any PHI/DMIX below
  void collect_offsets(std::vector<int>& out) const;
  int max_derivative_order() const;
};

ExprNode parse_expr(const std::string& text, int line = 0);
std::string to_string(const ExprNode& e);

// Env provides: V num(const Rational&), V phi(int k), V dmix(int k, int r1, int r2),
// V seed(int j), V dseed(int j, int r1, int r2), V var(const std::string&),
// V ref(const std::string&), V pivot().
template <class V, class Env>
V eval_expr(const ExprNode& e, Env& env) {
  using Op = ExprNode::Op;
  switch (e.op) {
    case Op::num: return env.num(e.value);
    case Op::phi: return env.phi(e.k);
    case Op::dmix: return env.dmix(e.k, e.r1, e.r2);
    case Op::seed: return env.seed(e.k);
    case Op::dseed: return env.dseed(e.k, e.r1, e.r2);
    case Op::var: return env.var(e.name);
    case Op::ref: return env.ref(e.name);
    case Op::pivot: return env.pivot();
    case Op::add: {
      V acc = eval_expr<V>(e.kids[0], env);
      for (size_t i = 1; i < e.kids.size(); ++i) acc = value_add(acc, eval_expr<V>(e.kids[i], env));
      return acc;
    }
    case Op::mul: {
      V acc = eval_expr<V>(e.kids[0], env);
      for (size_t i = 1; i < e.kids.size(); ++i) acc = value_mul(acc, eval_expr<V>(e.kids[i], env));
      return acc;
    }
    case Op::sub: return value_sub(eval_expr<V>(e.kids[0], env), eval_expr<V>(e.kids[1], env));
    case Op::div: return value_div(eval_expr<V>(e.kids[0], env), eval_expr<V>(e.kids[1], env));
    case Op::neg: return value_sub(env.num(Rational(0)), eval_expr<V>(e.kids[0], env));
    case Op::pow: {
      V base = eval_expr<V>(e.kids[0], env);
      V acc = base;
      for (int i = 1; i < e.k; ++i) acc = value_mul(acc, base);
      return acc;
    }
  }
  throw std::logic_error("bad expression node");
}

}  // namespace g2h
