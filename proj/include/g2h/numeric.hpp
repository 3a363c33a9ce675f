// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace g2h {

using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy. The CLI maps these onto exit codes 2, 3 and 4.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column);
  int line;
  int column;
};

struct Place {
  enum class Kind { archimedean, finite };
  Kind kind = Kind::archimedean;
  std::uint64_t prime = 0;

  static Place infinity();
  static Place finite_at(std::uint64_t q);

  bool is_finite() const { return kind == Kind::finite; }
  // n_v: 1 at infinity, log q at q.
  double local_factor() const;
  std::string str() const;

  bool operator==(const Place&) const = default;
  auto operator<=>(const Place&) const = default;
};

bool is_prime(const Integer& n);
long ord(const Integer& x, const Integer& q);
long ord(const Rational& x, const Integer& q);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

struct Factorization {
  std::vector<std::pair<Integer, long>> primes;  // ascending
  Integer cofactor = 1;  // unfactored part, 1 when complete
  bool complete() const { return cofactor == 1; }
};
// Trial division up to `bound`, then identifies a prime or perfect-power cofactor.
Factorization factor(const Integer& n, unsigned long bound = 100000);

// log|x|_v; for finite v this is -ord_v(x).
double log_abs(const Rational& x, const Place& v);
// Sum over all places of n_v log|x|_v.
double product_formula_check(const Rational& x);

// Multiprecision float with the full MPFR exponent range.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256);
  BigFloat(const Rational& q, mpfr_prec_t prec);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigFloat log_abs() const;
  std::string str(int digits = 20) const;
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

 private:
  mpfr_t v_;
};

// q-adic number: exact valuation plus a unit known modulo q^floor.
class PAdic {
 public:
  enum class State { normal, exact_zero, zero_at_precision };

  PAdic() = default;
  static PAdic from_rational(const Rational& x, std::uint64_t q, int N);
  static PAdic make(std::uint64_t q, long valuation, const Integer& unit, int N);

  std::uint64_t prime() const { return q_; }
  State state() const { return state_; }
  bool is_exact_zero() const { return state_ == State::exact_zero; }
  bool is_zero() const { return state_ != State::normal; }
  // Valuation; for a zero at precision this is the absolute precision.
  long valuation() const { return val_; }
  const Integer& unit() const { return unit_; }
  int relative_precision() const { return N_; }
  int precision_floor() const { return floor_; }
  long absolute_precision() const;

  friend PAdic operator+(const PAdic& a, const PAdic& b);
  friend PAdic operator-(const PAdic& a, const PAdic& b);
  friend PAdic operator*(const PAdic& a, const PAdic& b);
  friend PAdic operator/(const PAdic& a, const PAdic& b);
  PAdic operator-() const;

 private:
  std::uint64_t q_ = 2;
  State state_ = State::exact_zero;
  long val_ = 0;
  Integer unit_ = 0;
  int N_ = 64;
  int floor_ = 64;
};

Integer ipow(std::uint64_t q, long e);

// Value domains used by the recurrence engine.
struct ExactDomain {
  using value_type = Rational;
  Rational from(const Rational& x) const { return x; }
  static bool is_zero(const Rational& x) { return x == 0; }
};

struct RealDomain {
  using value_type = BigFloat;
  mpfr_prec_t bits = 256;
  BigFloat from(const Rational& x) const { return BigFloat(x, bits); }
  static bool is_zero(const BigFloat& x) { return x.is_zero(); }
};

struct PAdicDomain {
  using value_type = PAdic;
  std::uint64_t q = 2;
  int N = 64;
  int min_floor = 16;
  PAdic from(const Rational& x) const { return PAdic::from_rational(x, q, N); }
  static bool is_zero(const PAdic& x) { return x.is_zero(); }
};

template <class V>
V value_add(const V& x, const V& y) { return x + y; }
template <class V>
V value_sub(const V& x, const V& y) { return x - y; }
template <class V>
V value_mul(const V& x, const V& y) { return x * y; }
template <class V>
V value_div(const V& x, const V& y) {
  if constexpr (std::is_same_v<V, Rational>) {
    if (y == 0) throw DivisionByZero("division by exact zero");
  } else if constexpr (std::is_same_v<V, BigFloat>) {
    if (y.is_zero()) throw DivisionByZero("division by zero");
  }
  return x / y;
}

}  // namespace g2h
