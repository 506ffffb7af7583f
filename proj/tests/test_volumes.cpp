#include "doctest.h"

#include <cmath>
#include <numbers>

#include "lieconc/volumes.hpp"

using namespace lieconc;

namespace {

const SeriesTag kAll[] = {SeriesTag::A, SeriesTag::B, SeriesTag::C, SeriesTag::D};
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(1) == ExactScalar(mpq_class(2), 1));
  CHECK(sphere_volume(2) == ExactScalar(mpq_class(2), 2));
  CHECK(sphere_volume(4) == ExactScalar(mpq_class(1, 3), 4));
  CHECK_THROWS_AS(sphere_volume(0), std::invalid_argument);
}

TEST_CASE("group volumes from the Macdonald pipeline") {
  // SU(3): √3 (2π)^5 / 2! = 16√3 π^5
  const auto su3 = group_volume({SeriesTag::A, 3});
  REQUIRE(su3.exact);
  CHECK(*su3.exact == ExactScalar(mpq_class(16), 5, 3));
  // Spin(5): 2^9 π^6 / 3!
  CHECK(*group_volume({SeriesTag::B, 2}).exact == ExactScalar(mpq_class(512, 6), 6));
  // SU(3)/Z3
  CHECK(*group_volume({SeriesTag::A, 3}, 3).exact == ExactScalar(mpq_class(16, 3), 5, 3));
}

TEST_CASE("closed forms at small rank") {
  CHECK(closed_form_volume({SeriesTag::A, 2}) == ExactScalar(mpq_class(4), 2, 2));  // 4√2 π²
  CHECK(closed_form_volume({SeriesTag::C, 2}) == ExactScalar(mpq_class(8, 3), 6));
  CHECK(closed_form_volume({SeriesTag::D, 4}) == ExactScalar(mpq_class(131072, 6 * 1 * 6 * 120), 16));
}

TEST_CASE("center order validation and linearity") {
  CHECK_THROWS_AS(group_volume({SeriesTag::A, 4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(group_volume({SeriesTag::B, 3}, 4), std::invalid_argument);
  CHECK_THROWS_AS(group_volume({SeriesTag::D, 5}, 3), std::invalid_argument);
  CHECK_THROWS_AS(group_volume({SeriesTag::C, 3}, 0), std::invalid_argument);
  for (auto tag : kAll) {
    const Series s{tag, min_n(tag) + 2};
    const auto one = *group_volume(s, 1).exact;
    const int z = center_order(s);
    for (int m = 1; m <= z; ++m) {
      if (z % m) continue;
      CHECK(*group_volume(s, m).exact == one / ExactScalar::integer(m));
    }
  }
}

TEST_CASE("exact pipeline equals the closed forms") {
  for (auto tag : kAll)
    for (int n = min_n(tag); n <= 10; ++n) CHECK(macdonald_volume({tag, n}) == closed_form_volume({tag, n}));
}

TEST_CASE("log paths agree") {
  CHECK(log_volume({SeriesTag::A, 2}) == doctest::Approx(std::log(4 * std::sqrt(2.0) * kPi * kPi)).epsilon(1e-14));
  CHECK(std::fabs(log_volume({SeriesTag::B, 2}) - group_volume({SeriesTag::B, 2}).exact->log()) < 1e-10);
  for (auto tag : kAll) {
    for (int n = min_n(tag); n <= kExactRankLimit; ++n) {
      const auto r = group_volume({tag, n});
      REQUIRE(r.exact);
      CHECK(std::fabs(r.exact->log() - r.log_value) < 1e-10);
    }
  }
  const auto big = group_volume({SeriesTag::A, 50});
  CHECK_FALSE(big.exact);
  CHECK(std::isfinite(big.log_value));
  // independent sum-of-log-factorials oracle for SU(50)
  double oracle = 0.5 * std::log(50.0) + (50.0 * 51 / 2 - 1) * std::log(2 * kPi);
  for (int i = 1; i < 50; ++i)
    for (int k = 2; k <= i; ++k) oracle -= std::log(static_cast<double>(k));
  CHECK(big.log_value == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("ratio exponents") {
  // SU(3)/SU(2) directly: (√(3/2) (2π)^3 / 2!)^{1/5}
  const double direct = std::pow(std::sqrt(1.5) * std::pow(2 * kPi, 3) / 2.0, 0.2);
  CHECK(ratio_exponent({SeriesTag::A, 2}) == doctest::Approx(direct).epsilon(1e-12));
  const double exact_ratio =
      std::exp((closed_form_volume({SeriesTag::A, 3}).log() - closed_form_volume({SeriesTag::A, 2}).log()) / 5);
  CHECK(ratio_exponent({SeriesTag::A, 2}) == doctest::Approx(exact_ratio).epsilon(1e-12));

  const double a50 = ratio_exponent({SeriesTag::A, 50}) / std::sqrt(2 * kPi * std::numbers::e / 50);
  CHECK(a50 >= 0.98);
  CHECK(a50 <= 1.02);
  const double b50 = ratio_exponent({SeriesTag::B, 50}) / std::sqrt(2 * kPi * std::numbers::e / 100);
  CHECK(b50 >= 0.98);
  CHECK(b50 <= 1.02);
}

TEST_CASE("ratio exponent decreases with rank") {
  for (auto tag : kAll) {
    double prev = ratio_exponent({tag, std::max(5, min_n(tag))});
    for (int n = std::max(6, min_n(tag) + 1); n <= 60; ++n) {
      const double cur = ratio_exponent({tag, n});
      CHECK(cur < prev);
      prev = cur;
    }
  }
}
