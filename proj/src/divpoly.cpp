// SPDX-License-Identifier: MIT
#include "g2h/divpoly.hpp"

namespace g2h {

namespace {

int slot_of(const std::string& name) {
  for (int v = 0; v < kBasis; ++v)
    if (basis_names()[v] == name) return v;
  return -1;
}

}  // namespace

PointContext::PointContext(const Curve& c, const MumfordPoint& p, std::shared_ptr<const FormulaPack> pack)
    : curve_(c), point_(p), pack_(std::move(pack)) {
  if (!is_valid(c, p)) throw PreconditionError("point is not on the Jacobian of the curve");
  if (is_on_theta(p)) throw PreconditionError("point on theta divisor");
  x_ = wp_coords(p).array();
  for (int i = 0; i < 5; ++i) mu_[i] = Rational(c.mu()[i]);
}

std::shared_ptr<PointContext> make_context(const Curve& c, const MumfordPoint& p,
                                           std::shared_ptr<const FormulaPack> pack) {
  return std::make_shared<PointContext>(c, p, std::move(pack));
}

const SplitPoly::Specialized& PointContext::specialized(const SplitPoly& p) {
  auto it = spec_.find(&p);
  if (it == spec_.end()) it = spec_.emplace(&p, p.specialize(mu_)).first;
  return it->second;
}

const SplitPoly& PointContext::rel(const std::string& name) const {
  auto it = pack_->rel_split.find(name);
  if (it == pack_->rel_split.end()) throw std::invalid_argument("unknown variable " + name);
  return it->second;
}

Rational PointContext::poly_value(const SplitPoly& p) {
  return SplitPoly::eval_specialized<Rational>(specialized(p), x_, [](const Rational& q) { return q; });
}

const Jet& PointContext::basis_jet(int slot, int order) {
  while (static_cast<int>(basis_jets_.size()) <= order) {
    int R = static_cast<int>(basis_jets_.size());
    std::array<Jet, kBasis> next;
    if (R == 0) {
      for (int v = 0; v < kBasis; ++v) {
        next[v] = Jet(0);
        next[v].at(0, 0) = x_[v];
      }
    } else {
      const auto& prev = basis_jets_[R - 1];
      auto from = [](const Rational& q) { return Jet(q); };
      for (int v = 0; v < kBasis; ++v) {
        Jet d1 = SplitPoly::eval_specialized<Jet>(specialized(pack_->deriv_split[0][v]), prev, from);
        Jet d2 = SplitPoly::eval_specialized<Jet>(specialized(pack_->deriv_split[1][v]), prev, from);
        Jet j(R);
        j.at(0, 0) = x_[v];
        for (int n = 1; n <= R; ++n)
          for (int i = 0; i <= n; ++i) {
            int k = n - i;
            j.at(i, k) = i > 0 ? (d1.is_constant() ? Rational(n == 1 ? d1.value() : Rational(0)) : d1.at(i - 1, k))
                               : (d2.is_constant() ? Rational(n == 1 ? d2.value() : Rational(0)) : d2.at(0, k - 1));
          }
        next[v] = j;
      }
    }
    basis_jets_.push_back(next);
  }
  return basis_jets_[order][slot];
}

Jet PointContext::poly_jet(const SplitPoly& p, int order) {
  std::array<Jet, kBasis> x;
  for (int v = 0; v < kBasis; ++v) x[v] = basis_jet(v, order);
  Jet r = SplitPoly::eval_specialized<Jet>(specialized(p), x, [](const Rational& q) { return Jet(q); });
  if (r.is_constant()) {
    Jet full(order);
    full.at(0, 0) = r.value();
    return full;
  }
  return r;
}

Rational PointContext::var(const std::string& name) {
  int s = slot_of(name);
  if (s >= 0) return x_[s];
  if (name.size() == 3 && name.rfind("MU", 0) == 0 && name[2] >= '0' && name[2] <= '4') return mu_[name[2] - '0'];
  return poly_value(rel(name));
}

Jet PointContext::var_jet(const std::string& name, int order) {
  int s = slot_of(name);
  if (s >= 0) return basis_jet(s, order);
  if (name.rfind("MU", 0) == 0) return Jet(var(name));
  return poly_jet(rel(name), order);
}

Rational PointContext::seed(int j) {
  if (j < 1 || j > 5) throw std::invalid_argument("seed index must be in 1..5");
  return poly_value(pack_->phi_split[j]);
}

Jet PointContext::seed_jet(int j, int order) {
  if (j < 1 || j > 5) throw std::invalid_argument("seed index must be in 1..5");
  auto it = kan_.find(j);
  if (it != kan_.end() && it->second.order() >= order) return it->second.truncate(order);
  Jet r = poly_jet(pack_->phi_split[j], order);
  kan_[j] = r;
  return r;
}

Jet PointContext::kanayama_jet(long n, int order) {
  if (n < 0) return -kanayama_jet(-n, order);
  if (n == 0) return Jet(Rational(0));
  if (n <= 5) return seed_jet(static_cast<int>(n), order);
  auto it = kan_.find(n);
  if (it != kan_.end() && it->second.order() >= order) return it->second.truncate(order);
  const Recurrence& r = (n % 2) ? pack_->kanayama_odd : pack_->kanayama_even;
  long m = r.pivot_for(n);
  KanayamaEnv env{*this, m, order, r.derivative_order};
  Jet v = eval_expr<Jet>(r.expr, env);
  if (v.is_constant()) {
    Jet full(order);
    full.at(0, 0) = v.value();
    v = full;
  }
  v = v.truncate(order);
  kan_[n] = v;
  return v;
}

Rational PointContext::small_value(long n) {
  if (n < 0) return -small_value(-n);
  if (n > 8) throw std::invalid_argument("small_value covers |n| <= 8");
  if (n == 0) return 0;
  if (n <= 5) return seed(static_cast<int>(n));
  return kanayama_jet(n, 0).value();
}

const std::map<std::string, Rational>& PointContext::defines() {
  if (defines_) return *defines_;
  std::map<std::string, Rational> out;
  struct Env {
    PointContext& c;
    std::map<std::string, Rational>& d;
    Rational num(const Rational& q) { return q; }
    Rational phi(int) { throw std::invalid_argument("PHI inside a point constant"); }
    Rational dmix(int, int, int) { throw std::invalid_argument("PHI inside a point constant"); }
    Rational seed(int j) { return c.seed(j); }
    Rational dseed(int j, int r1, int r2) { return c.seed_jet(j, r1 + r2).at(r1, r2); }
    Rational var(const std::string& n) { return c.var(n); }
    Rational ref(const std::string& n) { return d.at(n); }
    Rational pivot() { throw std::invalid_argument("PIVOT inside a point constant"); }
  } env{*this, out};
  for (auto& def : pack_->defines) out[def.name] = eval_expr<Rational>(def.expr, env);
  defines_ = std::move(out);
  return *defines_;
}

bool PointContext::uchida_available() {
  if (uchida_ok_) return *uchida_ok_;
  try {
    defines();
    uchida_ok_ = true;
  } catch (const DivisionByZero&) {
    uchida_ok_ = false;
  }
  return *uchida_ok_;
}

}  // namespace g2h
