#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "lieconc/exact_scalar.hpp"

using lieconc::ExactScalar;

namespace {

// Random scalar with small square-ish radicands so that normalization has work to do.
ExactScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 30), rad(1, 72);
  std::uniform_int_distribution<unsigned> pi(0, 4);
  long a = num(rng);
  if (a == 0) a = 1;
  return ExactScalar(mpq_class(a, den(rng)), pi(rng), mpz_class(rad(rng)));
}

}  // namespace

TEST_CASE("products of radicals square out") {
  const auto r2 = ExactScalar(mpq_class(1), 0, 2);
  CHECK(r2 * r2 == ExactScalar::integer(2));

  const auto a = ExactScalar(mpq_class(1, 2), 2, 2);
  const auto b = ExactScalar(mpq_class(3), 1, 2);
  const auto ab = a * b;
  CHECK(ab == ExactScalar(mpq_class(3), 3, 1));
  CHECK(ab.q() == 3);
  CHECK(ab.pi_pow() == 3);
  CHECK(ab.radicand() == 1);

  const auto x = ExactScalar(mpq_class(7, 5), 2, 3);
  CHECK(x * ExactScalar() == x);
}

TEST_CASE("division") {
  CHECK(ExactScalar(mpq_class(4), 2, 2) / ExactScalar(mpq_class(2), 2, 2) == ExactScalar::integer(2));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_scalar(rng);
    CHECK(a / a == ExactScalar());
  }

  const auto q = ExactScalar(mpq_class(1), 0, 6) / ExactScalar(mpq_class(1), 0, 2);
  CHECK(q == ExactScalar(mpq_class(1), 0, 3));
  CHECK(std::fabs(q.to_double() - std::sqrt(6.0) / std::sqrt(2.0)) < 1e-15);

  CHECK_THROWS_AS(ExactScalar::integer(1) / ExactScalar(mpq_class(0)), std::domain_error);
  CHECK_THROWS_AS(ExactScalar::integer(1) / ExactScalar::pi_power(1), std::domain_error);
}

TEST_CASE("canonical zero and radicand normalization") {
  const auto z = ExactScalar(mpq_class(0), 5, 7);
  CHECK(z.pi_pow() == 0);
  CHECK(z.radicand() == 1);
  CHECK(z == ExactScalar(mpq_class(0)));

  const auto r = ExactScalar(mpq_class(1), 0, 72);  // √72 = 6√2
  CHECK(r.q() == 6);
  CHECK(r.radicand() == 2);
  CHECK(ExactScalar::sqrt_of(mpq_class(3, 4)) == ExactScalar(mpq_class(1, 2), 0, 3));
}

TEST_CASE("float conversion and logs") {
  CHECK(ExactScalar(mpq_class(2), 1) .to_double() == doctest::Approx(2 * std::numbers::pi).epsilon(1e-15));
  CHECK(ExactScalar(mpq_class(1), 0, 2).to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(ExactScalar(mpq_class(-1)).log(), std::domain_error);
  CHECK_THROWS_AS(ExactScalar(mpq_class(0)).log(), std::domain_error);

  // √5 (2π)^14 / (1!2!3!4!) against an independent log-gamma evaluation
  mpz_class two14;
  mpz_ui_pow_ui(two14.get_mpz_t(), 2, 14);
  const auto v = ExactScalar(mpq_class(two14, 1 * 2 * 6 * 24), 14, 5);
  double oracle = 0.5 * std::log(5.0) + 14 * std::log(2 * std::numbers::pi);
  for (int i = 1; i <= 4; ++i) oracle -= std::lgamma(i + 1.0);
  CHECK(std::fabs(v.log() - oracle) < 1e-12);
}

TEST_CASE("huge values stay representable in log space") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  const auto v = ExactScalar(mpq_class(big), 3, 2);
  CHECK(std::isinf(v.to_double()));
  const double oracle = 400 * std::log(10.0) + 3 * std::log(std::numbers::pi) + 0.5 * std::log(2.0);
  CHECK(v.log() == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(v.to_decimal().find("e+401") != std::string::npos);
}

TEST_CASE("rendering") {
  CHECK(ExactScalar(mpq_class(16), 5, 3).to_string() == "16·√3·π^5");
  CHECK(ExactScalar(mpq_class(8, 3), 6).to_string() == "8·π^6/3");
  CHECK(ExactScalar(mpq_class(1), 1).to_string() == "π");
  CHECK(ExactScalar().to_string() == "1");
  CHECK(ExactScalar(mpq_class(2), 1).to_decimal() == "6.28318530717959");
}

TEST_CASE("property: multiplication is a commutative monoid on normalized triples") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    // re-normalizing an already normalized triple is a no-op
    const ExactScalar again(a.q(), a.pi_pow(), a.radicand());
    CHECK(again == a);
  }
}

TEST_CASE("property: float conversion is multiplicative") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_scalar(rng), b = random_scalar(rng);
    const double prod = a.to_double() * b.to_double();
    CHECK(std::fabs((a * b).to_double() - prod) / std::fabs(prod) < 1e-12);
  }
}
