// SPDX-License-Identifier: MIT
#include "g2h/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>

namespace g2h {

ParseError::ParseError(const std::string& msg, int l, int c)
    : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
      line(l),
      column(c) {}

Place Place::infinity() { return Place{}; }

Place Place::finite_at(std::uint64_t q) {
  if (!is_prime(Integer(std::to_string(q)))) throw std::invalid_argument("place: " + std::to_string(q) + " is not prime");
  return Place{Kind::finite, q};
}

double Place::local_factor() const { return is_finite() ? std::log(static_cast<double>(prime)) : 1.0; }

std::string Place::str() const { return is_finite() ? std::to_string(prime) : std::string("inf"); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long ord(const Integer& x, const Integer& q) {
  if (x == 0) throw std::domain_error("ord of zero");
  Integer r;
  return static_cast<long>(mpz_remove(r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t()));
}

long ord(const Rational& x, const Integer& q) { return ord(Integer(x.get_num()), q) - ord(Integer(x.get_den()), q); }

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw UsageError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  auto ok = [](const std::string& s) {
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!ok(num) || !ok(den) || den[0] == '-') throw UsageError("malformed rational '" + text + "'");
  Integer d(den);
  if (d == 0) throw UsageError("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Factorization factor(const Integer& n, unsigned long bound) {
  Factorization out;
  Integer m = abs(n);
  if (m == 0) throw std::domain_error("factor of zero");
  for (unsigned long p = 2; p <= bound && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      long e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.primes.emplace_back(Integer(p), e);
    }
  }
  if (m > 1) {
    // A leftover below bound^2 is prime; otherwise try prime powers.
    Integer b2 = Integer(bound) * bound;
    if (m < b2 || is_prime(m)) {
      out.primes.emplace_back(m, 1);
    } else {
      bool done = false;
      for (unsigned long k = 2; k < 64 && !done; ++k) {
        Integer r;
        if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0 && is_prime(r)) {
          out.primes.emplace_back(r, static_cast<long>(k));
          done = true;
        }
      }
      if (!done) out.cofactor = m;
    }
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

double log_abs(const Rational& x, const Place& v) {
  if (x == 0) throw std::domain_error("log_abs of zero");
  if (v.is_finite()) return -static_cast<double>(ord(x, Integer(std::to_string(v.prime))));
  BigFloat f(x, 128);
  return f.log_abs().to_double();
}

double product_formula_check(const Rational& x) {
  if (x == 0) throw std::domain_error("product formula of zero");
  double total = log_abs(x, Place::infinity());
  for (const Integer* part : {&x.get_num(), &x.get_den()}) {
    Factorization f = factor(*part);
    if (!f.complete()) throw std::runtime_error("product_formula_check: could not factor " + part->get_str());
    for (auto& [p, e] : f.primes) {
      (void)e;
      double lp = std::log(p.get_d());
      total += lp * -static_cast<double>(ord(x, p));
    }
  }
  return total;
}

// ---------------------------------------------------------------- BigFloat

namespace {
void widen_exponent_range() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  });
}
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  widen_exponent_range();
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec) {
  widen_exponent_range();
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  widen_exponent_range();
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::log_abs() const {
  if (is_zero()) throw std::domain_error("log of zero");
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

#define G2H_BF_OP(op, fn)                                             \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {        \
    BigFloat r(std::max(a.precision(), b.precision()));               \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
    return r;                                                         \
  }
G2H_BF_OP(+, mpfr_add)
G2H_BF_OP(-, mpfr_sub)
G2H_BF_OP(*, mpfr_mul)
G2H_BF_OP(/, mpfr_div)
#undef G2H_BF_OP

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

// ------------------------------------------------------------------- PAdic

Integer ipow(std::uint64_t q, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(e));
  return r;
}

PAdic PAdic::make(std::uint64_t q, long valuation, const Integer& unit, int N) {
  PAdic r;
  r.q_ = q;
  r.N_ = N;
  r.floor_ = N;
  Integer u = unit;
  Integer qq(std::to_string(q));
  long extra = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), qq.get_mpz_t()));
  r.state_ = State::normal;
  r.val_ = valuation + extra;
  Integer mod = ipow(q, N);
  mpz_fdiv_r(r.unit_.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PAdic PAdic::from_rational(const Rational& x, std::uint64_t q, int N) {
  PAdic r;
  r.q_ = q;
  r.N_ = N;
  r.floor_ = N;
  if (x == 0) return r;
  Integer qq(std::to_string(q));
  Integer num = x.get_num(), den = x.get_den();
  long a = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), qq.get_mpz_t()));
  long b = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), qq.get_mpz_t()));
  Integer mod = ipow(q, N), inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  r.state_ = State::normal;
  r.val_ = a - b;
  r.unit_ = num * inv;
  mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
  return r;
}

long PAdic::absolute_precision() const {
  switch (state_) {
    case State::normal: return val_ + floor_;
    case State::zero_at_precision: return val_;
    default: return std::numeric_limits<long>::max();
  }
}

PAdic operator*(const PAdic& a, const PAdic& b) {
  PAdic r;
  r.q_ = a.q_;
  r.N_ = std::max(a.N_, b.N_);
  if (a.is_exact_zero() || b.is_exact_zero()) {
    r.floor_ = r.N_;
    return r;
  }
  if (a.is_zero() || b.is_zero()) {
    r.state_ = PAdic::State::zero_at_precision;
    r.floor_ = 0;
    r.val_ = a.val_ + b.val_;
    return r;
  }
  r.state_ = PAdic::State::normal;
  r.val_ = a.val_ + b.val_;
  r.floor_ = std::min(a.floor_, b.floor_);
  Integer mod = ipow(r.q_, r.floor_);
  r.unit_ = a.unit_ * b.unit_;
  mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PAdic operator/(const PAdic& a, const PAdic& b) {
  if (b.is_zero()) throw DivisionByZero("p-adic division by a value indistinguishable from zero");
  PAdic r;
  r.q_ = a.q_;
  r.N_ = std::max(a.N_, b.N_);
  if (a.is_exact_zero()) {
    r.floor_ = r.N_;
    return r;
  }
  if (a.is_zero()) {
    r.state_ = PAdic::State::zero_at_precision;
    r.floor_ = 0;
    r.val_ = a.val_ - b.val_;
    return r;
  }
  r.state_ = PAdic::State::normal;
  r.val_ = a.val_ - b.val_;
  r.floor_ = std::min(a.floor_, b.floor_);
  Integer mod = ipow(r.q_, r.floor_), inv;
  mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
  r.unit_ = a.unit_ * inv;
  mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  PAdic r;
  r.q_ = a.q_;
  r.N_ = std::max(a.N_, b.N_);
  long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  // Lowest valuation among the nonzero summands visible at this precision.
  long v = abs_prec;
  for (const PAdic* x : {&a, &b})
    if (!x->is_zero() && x->val_ < v) v = x->val_;
  if (v >= abs_prec) {
    r.state_ = PAdic::State::zero_at_precision;
    r.floor_ = 0;
    r.val_ = abs_prec;
    return r;
  }
  Integer mod = ipow(r.q_, abs_prec - v);
  Integer s = 0;
  for (const PAdic* x : {&a, &b})
    if (!x->is_zero() && x->val_ < abs_prec) s += x->unit_ * ipow(r.q_, x->val_ - v);
  mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  if (s == 0) {
    r.state_ = PAdic::State::zero_at_precision;
    r.floor_ = 0;
    r.val_ = abs_prec;
    return r;
  }
  Integer qq(std::to_string(r.q_));
  long k = static_cast<long>(mpz_remove(s.get_mpz_t(), s.get_mpz_t(), qq.get_mpz_t()));
  r.state_ = PAdic::State::normal;
  r.val_ = v + k;
  r.floor_ = static_cast<int>(abs_prec - r.val_);
  r.unit_ = s;
  return r;
}

PAdic PAdic::operator-() const {
  PAdic r = *this;
  if (state_ == State::normal) {
    Integer mod = ipow(q_, floor_);
    r.unit_ = -unit_;
    mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
  }
  return r;
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

}  // namespace g2h
