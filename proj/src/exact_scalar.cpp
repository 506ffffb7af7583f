#include "lieconc/exact_scalar.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace lieconc {

namespace {

// Splits n into square part and square-free part: n = root² · free.
void split_square(const mpz_class& n, mpz_class& root, mpz_class& free) {
  root = 1;
  free = 1;
  mpz_class rest = n;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) free *= p;
  }
  free *= rest;
}

}  // namespace

double log_abs(const mpz_class& z) {
  if (sgn(z) == 0) return -HUGE_VAL;
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::numbers::ln2;
}

ExactScalar::ExactScalar() : q_(1) {}

ExactScalar::ExactScalar(mpq_class q, unsigned pi_pow, mpz_class radicand)
    : q_(std::move(q)), k_(pi_pow), s_(std::move(radicand)) {
  if (sgn(s_) < 0) throw std::domain_error("ExactScalar: negative radicand");
  q_.canonicalize();
  normalize();
}

ExactScalar ExactScalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("ExactScalar: zero denominator");
  return ExactScalar(mpq_class(num, den));
}

ExactScalar ExactScalar::sqrt_of(const mpq_class& r) {
  if (sgn(r) < 0) throw std::domain_error("ExactScalar: square root of a negative value");
  // √(a/b) = √(a·b) / b
  return ExactScalar(mpq_class(1, r.get_den()), 0, r.get_num() * r.get_den());
}

void ExactScalar::normalize() {
  if (sgn(q_) == 0 || sgn(s_) == 0) {
    q_ = 0;
    k_ = 0;
    s_ = 1;
    return;
  }
  mpz_class root, free;
  split_square(s_, root, free);
  q_ *= root;
  q_.canonicalize();
  s_ = free;
}

ExactScalar ExactScalar::pow(unsigned e) const {
  ExactScalar out;
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExactScalar(mpq_class(0));
  return ExactScalar(a.q_ * b.q_, a.k_ + b.k_, a.s_ * b.s_);
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  if (a.is_zero()) return a;
  if (a.k_ < b.k_) throw std::domain_error("ExactScalar: quotient would need a negative power of pi");
  // √sa / √sb = √(sa·sb) / sb
  mpq_class q = a.q_ / b.q_;
  q /= mpq_class(b.s_);
  return ExactScalar(q, a.k_ - b.k_, a.s_ * b.s_);
}

double ExactScalar::to_double() const {
  if (is_zero()) return 0.0;
  long en = 0, ed = 0;
  const long double mn = mpz_get_d_2exp(&en, q_.get_num_mpz_t());
  const long double md = mpz_get_d_2exp(&ed, q_.get_den_mpz_t());
  long double v = mn / md;
  v *= std::pow(std::numbers::pi_v<long double>, static_cast<long double>(k_));
  v *= std::sqrt(static_cast<long double>(s_.get_d()));
  return static_cast<double>(std::ldexp(v, static_cast<int>(en - ed)));
}

double ExactScalar::log() const {
  if (sign() <= 0) throw std::domain_error("ExactScalar: log of a non-positive value");
  return log_abs(q_.get_num()) - log_abs(q_.get_den()) +
         static_cast<double>(k_) * std::log(std::numbers::pi) + 0.5 * log_abs(s_);
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  mpz_class num = q_.get_num();
  if (sgn(num) < 0) {
    out += "-";
    num = -num;
  }
  std::string body;
  auto join = [&body](const std::string& f) {
    if (!body.empty()) body += "·";
    body += f;
  };
  if (num != 1 || (s_ == 1 && k_ == 0)) join(num.get_str());
  if (s_ != 1) join("√" + s_.get_str());
  if (k_ == 1) join("π");
  if (k_ > 1) join("π^" + std::to_string(k_));
  out += body;
  if (q_.get_den() != 1) out += "/" + q_.get_den().get_str();
  return out;
}

std::string ExactScalar::to_decimal() const {
  char buf[64];
  const double v = to_double();
  if (v == 0.0 || (std::isfinite(v) && std::fpclassify(v) == FP_NORMAL)) {
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
  }
  const double l10 = ExactScalar(abs(q_), k_, s_).log() / std::numbers::ln10;
  const double e = std::floor(l10);
  double m = std::pow(10.0, l10 - e);
  std::snprintf(buf, sizeof buf, "%s%.14fe%+d", sign() < 0 ? "-" : "", m, static_cast<int>(e));
  return buf;
}

ExactScalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return ExactScalar(mpq_class(f));
}

}  // namespace lieconc
