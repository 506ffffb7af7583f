#pragma once

#include <gmpxx.h>

#include <string>

namespace lieconc {

/// Exact value q · π^k · √s with q rational, k ≥ 0 and s square-free.
///
/// Closed under multiplication and (restricted) division, which is all the
/// volume formulas need. There is deliberately no addition.
class ExactScalar {
public:
  ExactScalar();  // exact one
  ExactScalar(mpq_class q, unsigned pi_pow = 0, mpz_class radicand = 1);

  static ExactScalar integer(long v) { return ExactScalar(mpq_class(v)); }
  static ExactScalar rational(long num, long den);
  static ExactScalar pi_power(unsigned k) { return ExactScalar(mpq_class(1), k); }
  /// √r for a non-negative rational r, normalized into q·√s form.
  static ExactScalar sqrt_of(const mpq_class& r);

  const mpq_class& q() const { return q_; }
  unsigned pi_pow() const { return k_; }
  const mpz_class& radicand() const { return s_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  ExactScalar pow(unsigned e) const;

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  /// Throws std::domain_error on division by zero or a negative π power.
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.k_ == b.k_ && a.s_ == b.s_ && a.q_ == b.q_;
  }

  double to_double() const;
  /// Natural log; throws std::domain_error when the value is not positive.
  double log() const;

  /// Symbolic form, e.g. "16·√3·π^5" or "2^17·π^16/4320".
  std::string to_string() const;
  /// Decimal rendering to 15 significant digits; stays finite past double range.
  std::string to_decimal() const;

private:
  void normalize();

  mpq_class q_;
  unsigned k_ = 0;
  mpz_class s_ = 1;
};

ExactScalar factorial(unsigned n);

/// ln|z| for arbitrarily large integers.
double log_abs(const mpz_class& z);

}  // namespace lieconc
