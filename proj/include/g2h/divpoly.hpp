// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "g2h/jacobian.hpp"
#include "g2h/jet.hpp"
#include "g2h/pack.hpp"

namespace g2h {

// Exact per-point data: basis coordinates, derivative jets, seeds, the
// Kanayama values and the point constants of the Uchida recurrences.
class PointContext {
 public:
  PointContext(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack);

  const Curve& curve() const { return curve_; }
  const MumfordPoint& point() const { return point_; }
  const FormulaPack& pack() const { return *pack_; }
  const std::array<Rational, kBasis>& coords() const { return x_; }
  const std::array<Rational, 5>& mu() const { return mu_; }

  // Values of a basis column, MU, or relation polynomial at the point.
  Rational var(const std::string& name);
  Jet var_jet(const std::string& name, int order);
  Rational poly_value(const SplitPoly& p);
  Jet poly_jet(const SplitPoly& p, int order);
  const Jet& basis_jet(int slot, int order);

  Rational seed(int j);  // phi_j(p), j <= 5
  Jet seed_jet(int j, int order);

  // phi_n as a jet through the derivative recurrences only; valid for any n.
  Jet kanayama_jet(long n, int order);
  // phi_n for |n| <= 8 (seeds, then the derivative recurrence).
  Rational small_value(long n);

  // False when a Uchida point constant is undefined (some seed or the
  // window determinant vanishes).
  bool uchida_available();
  const std::map<std::string, Rational>& defines();

 private:
  Curve curve_;
  MumfordPoint point_;
  std::shared_ptr<const FormulaPack> pack_;
  std::array<Rational, kBasis> x_;
  std::array<Rational, 5> mu_;
  std::map<const SplitPoly*, SplitPoly::Specialized> spec_;
  std::vector<std::array<Jet, kBasis>> basis_jets_;  // index = order
  std::map<long, Jet> kan_;                          // highest order computed per n
  std::optional<std::map<std::string, Rational>> defines_;
  std::optional<bool> uchida_ok_;

  const SplitPoly::Specialized& specialized(const SplitPoly& p);
  const SplitPoly& rel(const std::string& name) const;
};

// Eval environment for recurrence trees over jets.
struct KanayamaEnv {
  PointContext& ctx;
  long m;
  int order;
  int extra;
  Jet num(const Rational& q) { return Jet(q); }
  Jet phi(int k) { return ctx.kanayama_jet(m + k, order + extra); }
  Jet dmix(int k, int r1, int r2) { return ctx.kanayama_jet(m + k, order + extra).shift(r1, r2); }
  Jet seed(int j) { return ctx.seed_jet(j, order + extra); }
  Jet dseed(int j, int r1, int r2) { return ctx.seed_jet(j, order + extra).shift(r1, r2); }
  Jet var(const std::string& n) { return ctx.var_jet(n, order); }
  Jet ref(const std::string& n) { throw std::invalid_argument("REF " + n + " inside a derivative recurrence"); }
  Jet pivot() { return Jet(Rational(m)); }
};

inline Jet value_div(const Jet& a, const Jet& b) { return a / b; }

// phi_n(p) over a value domain (exact rationals, MPFR reals, q-adics), computed
// by memoized descent: E_n needs only the window around n/2.
template <class D>
class PhiSequence {
 public:
  using V = typename D::value_type;

  PhiSequence(std::shared_ptr<PointContext> ctx, D domain) : ctx_(std::move(ctx)), dom_(domain) {}

  const D& domain() const { return dom_; }
  PointContext& context() { return *ctx_; }

  V get(long n) {
    if (n < 0) return value_sub(dom_.from(Rational(0)), get(-n));
    if (n == 0) return dom_.from(Rational(0));
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    V v = compute(n);
    memo_.emplace(n, v);
    return v;
  }

  // Drops memoized values below n; a stream at index n never revisits them.
  void forget_below(long n) { memo_.erase(memo_.lower_bound(9), memo_.lower_bound(std::max<long>(n, 9))); }
  size_t memo_size() const { return memo_.size(); }

  void set_window_log(bool on) { log_on_ = on; }
  // For each n computed by the window recurrence, the indices it read.
  const std::map<long, std::set<long>>& window_log() const { return log_; }

  // Exact domain: indices where E_n was not an integer although the point
  // coordinates are integral.
  const std::vector<long>& nonintegral() const { return nonintegral_; }
  bool integrality_flag() const { return !nonintegral_.empty(); }

 private:
  std::shared_ptr<PointContext> ctx_;
  D dom_;
  std::map<long, V> memo_;
  std::map<std::string, V> defs_;
  bool log_on_ = false;
  std::map<long, std::set<long>> log_;
  std::vector<long> nonintegral_;

  struct Env {
    PhiSequence& s;
    long m;
    long n;
    V num(const Rational& q) { return s.dom_.from(q); }
    V phi(int k) {
      if (s.log_on_) s.log_[n].insert(m + k);
      return s.get(m + k);
    }
    V dmix(int k, int r1, int r2) {
      if (r1 || r2) throw std::invalid_argument("derivative symbol in a window recurrence");
      return phi(k);
    }
    V seed(int j) { return s.dom_.from(s.ctx_->seed(j)); }
    V dseed(int j, int r1, int r2) { return s.dom_.from(s.ctx_->seed_jet(j, r1 + r2).at(r1, r2)); }
    V var(const std::string& name) { return s.dom_.from(s.ctx_->var(name)); }
    V ref(const std::string& name) {
      auto it = s.defs_.find(name);
      if (it != s.defs_.end()) return it->second;
      V v = s.dom_.from(s.ctx_->defines().at(name));
      s.defs_.emplace(name, v);
      return v;
    }
    V pivot() { return s.dom_.from(Rational(m)); }
  };

  V compute(long n) {
    if (n <= 8 || !ctx_->uchida_available()) {
      Rational e = n <= 8 ? ctx_->small_value(n) : ctx_->kanayama_jet(n, 0).value();
      return dom_.from(e);
    }
    const FormulaPack& pk = ctx_->pack();
    const Recurrence& r = (n % 2) ? pk.uchida_odd : pk.uchida_even;
    long m = r.pivot_for(n);
    Env env{*this, m, n};
    V v = eval_expr<V>(r.expr, env);
    check(n, v);
    return v;
  }

  void check(long n, const V& v) {
    if constexpr (std::is_same_v<V, Rational>) {
      if (v.get_den() != 1 && has_integral_coords(ctx_->point())) nonintegral_.push_back(n);
    } else if constexpr (std::is_same_v<V, PAdic>) {
      if (v.state() == PAdic::State::normal && v.precision_floor() < dom_.min_floor)
        throw PrecisionExhausted("q-adic precision below " + std::to_string(dom_.min_floor) + " digits at n = " +
                                 std::to_string(n));
    }
  }
};

// Seeds phi_1..phi_5 (index 0 unused).
template <class D>
std::array<typename D::value_type, 6> phi_seeds(PointContext& ctx, const D& dom) {
  if (is_on_theta(ctx.point())) throw PreconditionError("point on theta divisor");
  std::array<typename D::value_type, 6> out;
  out[0] = dom.from(Rational(0));
  for (int j = 1; j <= 5; ++j) out[j] = dom.from(ctx.seed(j));
  return out;
}

// phi_6, phi_7, phi_8.
template <class D>
std::array<typename D::value_type, 3> phi_kanayama(PointContext& ctx, const D& dom) {
  return {dom.from(ctx.small_value(6)), dom.from(ctx.small_value(7)), dom.from(ctx.small_value(8))};
}

template <class D>
typename D::value_type phi_next(PhiSequence<D>& seq, long n) {
  return seq.get(n);
}

// Calls sink(n, E_n) for n = 1..n_max in order.
template <class D>
void phi_stream(PhiSequence<D>& seq, long n_max,
                const std::function<void(long, const typename D::value_type&)>& sink) {
  for (long n = 1; n <= n_max; ++n) {
    sink(n, seq.get(n));
    seq.forget_below(n / 2 - 8);
  }
}

std::shared_ptr<PointContext> make_context(const Curve& c, const MumfordPoint& p,
                                           std::shared_ptr<const FormulaPack> pack);

// Runs f(domain) and doubles N on PrecisionExhausted, up to max_N.
template <class F>
auto with_padic_restart(PAdicDomain dom, int max_N, F f) {
  for (;;) {
    try {
      return f(dom);
    } catch (const PrecisionExhausted&) {
      if (dom.N * 2 > max_N) throw;
      dom.N *= 2;
    }
  }
}

}  // namespace g2h
