#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lieconc/cpn.hpp"
#include "lieconc/haar.hpp"

using namespace lieconc;

namespace {

constexpr double kPi = std::numbers::pi;

SamplerConfig cfg(GroupFamily f, int size, long count, std::uint64_t seed, int workers = 1) {
  return {f, size, count, seed, workers};
}

Eigen::MatrixXcd symplectic_j(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return j;
}

// majority of three seeds
template <class F>
bool majority(F passes) {
  int ok = 0;
  for (std::uint64_t s : {101ULL, 202ULL, 303ULL}) ok += passes(s);
  return ok >= 2;
}

}  // namespace

TEST_CASE("samplers produce group elements") {
  for (int n : {2, 5, 9}) {
    for (const auto& g : sample_su(cfg(GroupFamily::SU, n, 200, 1))) {
      CHECK((g.adjoint() * g - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(g.determinant() - 1.0) < 1e-12);
    }
  }
  for (int m : {3, 6, 11}) {
    for (const auto& g : sample_so(cfg(GroupFamily::SO, m, 200, 2))) {
      CHECK((g.transpose() * g - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(g.determinant() == doctest::Approx(1.0));
    }
  }
  for (int n : {1, 2, 5}) {
    const auto j = symplectic_j(n);
    for (const auto& u : sample_usp(cfg(GroupFamily::USp, n, 200, 3))) {
      CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((u.transpose() * j * u - j).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK_THROWS_AS(sample_su(cfg(GroupFamily::SU, 1, 10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(sample_so(cfg(GroupFamily::SO, 4, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(sample_usp(cfg(GroupFamily::SU, 2, 10, 0)), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
  const auto a = concentration_experiment(cfg(GroupFamily::SU, 6, 3000, 77, 1), 0.4);
  const auto b = concentration_experiment(cfg(GroupFamily::SU, 6, 3000, 77, 4), 0.4);
  CHECK(a.distances == b.distances);
  CHECK(a.empirical_mass == b.empirical_mass);
  CHECK(a.ks_statistic == b.ks_statistic);
  const auto c = sample_usp(cfg(GroupFamily::USp, 3, 50, 9, 3));
  const auto d = sample_usp(cfg(GroupFamily::USp, 3, 50, 9, 1));
  for (size_t i = 0; i < c.size(); ++i) CHECK((c[i] - d[i]).cwiseAbs().maxCoeff() == 0.0);
  CHECK(stream_seed(1, 2) != stream_seed(2, 1));
}

TEST_CASE("cp coordinate") {
  const auto id = cp_coordinate(Eigen::MatrixXcd::Identity(4, 4));
  CHECK(id.zeta0 == 1.0);
  CHECK(id.xi == 0.0);
  CHECK(majority([](std::uint64_t s) { return zeta_squared_ks(cfg(GroupFamily::SU, 11, 10000, s)).pvalue > 0.01; }));
}

TEST_CASE("sphere band mass") {
  for (double r : {0.0, 0.3, 1.0, 1.5}) {
    CHECK(sphere_band_mass(1, r) == doctest::Approx(2 * r / kPi).epsilon(1e-12));
    CHECK(sphere_band_mass(2, r) == doctest::Approx(std::sin(r)).epsilon(1e-12));
  }
  double worst = 0;
  for (int m = 1; m <= 40; ++m) {
    double prev = -1;
    for (int k = 0; k <= 15; ++k) {
      const double r = k * 0.1;
      const double b = sphere_band_mass(m, r);
      CHECK(b >= prev);
      prev = b;
      worst = std::max(worst, std::abs(b - sphere_band_mass_quadrature(m, r)));
    }
    CHECK(sphere_band_mass(m, kPi / 2) == 1.0);
  }
  CHECK(worst < 1e-10);
  CHECK_THROWS_AS(sphere_band_mass(0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(sphere_band_mass(3, 2.0), std::invalid_argument);
}

TEST_CASE("Kolmogorov-Smirnov") {
  // the two series forms agree where both converge
  for (double l : {0.6, 0.9, 0.99}) {
    double acc = 0;
    for (int k = 1; k <= 100; ++k) acc += (k % 2 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * l * l);
    CHECK(kolmogorov_q(l) == doctest::Approx(2 * acc).epsilon(1e-10));
  }
  CHECK(kolmogorov_q(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(kolmogorov_q(0.0) == 1.0);

  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u;
  std::vector<double> xs(2000);
  for (auto& x : xs) x = u(rng);
  std::sort(xs.begin(), xs.end());
  const auto self = ks_test(xs, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(self.pvalue > 0.01);

  std::vector<double> constant(50, 0.3);
  const auto c = ks_test(constant, [](double x) { return x; });
  CHECK(c.statistic >= std::max(0.3, 0.7));

  std::vector<double> unsorted{3, 1, 2, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(ks_test(unsorted, [](double x) { return x; }), std::invalid_argument);
  CHECK_THROWS_AS(ks_test(std::vector<double>{1, 2, 3}, [](double x) { return x; }), std::invalid_argument);

  std::vector<double> a(3000), b(3000), shifted(3000);
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = u(rng);
    b[i] = u(rng);
    shifted[i] = u(rng) + 0.1;
  }
  CHECK(ks_two_sample(a, b).pvalue > 0.01);
  CHECK(ks_two_sample(a, shifted).pvalue < 1e-6);
}

TEST_CASE("SU(2) trace law") {
  CHECK(majority([](std::uint64_t s) { return su2_trace_test(cfg(GroupFamily::SU, 2, 100000, s)).pvalue > 0.01; }));
}

TEST_CASE("Haar invariance on all three families") {
  for (const auto& [f, size] : {std::pair{GroupFamily::SU, 8}, std::pair{GroupFamily::SO, 16}, std::pair{GroupFamily::USp, 8}})
    for (bool left : {true, false})
      CHECK(majority([&](std::uint64_t s) { return invariance_test(cfg(f, size, 20000, s), left).pvalue > 0.01; }));
  CHECK(majority([](std::uint64_t s) { return invariance_test(cfg(GroupFamily::SU, 8, 100000, s), true).pvalue > 0.01; }));
}

TEST_CASE("SU concentration law") {
  for (int n : {3, 6, 11})
    for (double r : {0.2, 0.4, 0.8}) {
      const auto rep = concentration_experiment(cfg(GroupFamily::SU, n, 20000, 1234 + n), r);
      CHECK(rep.predicted_mass == doctest::Approx(1 - std::pow(std::cos(r), 2 * (n - 1))));
      CHECK(std::abs(rep.z_score) < 3);
      CHECK(rep.ci_low <= rep.empirical_mass);
    }
  const auto full = concentration_experiment(cfg(GroupFamily::SU, 5, 2000, 3), kPi / 2 - 1e-9);
  CHECK(full.empirical_mass == 1.0);
  CHECK_THROWS_AS(concentration_experiment(cfg(GroupFamily::SU, 5, 10, 3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(concentration_experiment(cfg(GroupFamily::SU, 5, 10, 3), kPi / 2), std::invalid_argument);
}

TEST_CASE("band mass of the Haar samples matches the CP^n band") {
  // the same law as the CP^n density band: μ(V_r) = 1 - cos^{2n} r
  for (int n : {2, 5}) {
    const double r = 0.5;
    CHECK(predicted_band_mass(GroupFamily::SU, n + 1, r) == doctest::Approx(band_mass(n, r).complement));
  }
}

TEST_CASE("product factorization on the base spheres") {
  const std::pair<GroupFamily, int> cases[] = {{GroupFamily::SO, 5}, {GroupFamily::SO, 6}, {GroupFamily::USp, 2}, {GroupFamily::USp, 3}};
  for (const auto& [f, size] : cases) {
    const auto rep = concentration_experiment(cfg(f, size, 20000, 55 + size), 0.5);
    CHECK(std::abs(rep.z_score) < 3);
    CHECK(rep.ks_pvalue > 1e-3);
  }
  CHECK(predicted_band_mass(GroupFamily::SO, 5, 0.5) == doctest::Approx(sphere_band_mass(4, 0.5) * sphere_band_mass(3, 0.5)));
  CHECK(concentration_experiment(cfg(GroupFamily::SO, 5, 100, 1), 0.5).base == "S^4 x S^3");
  CHECK(concentration_experiment(cfg(GroupFamily::USp, 2, 100, 1), 0.5).base == "S^7");
}

TEST_CASE("histogram") {
  const std::vector<double> v{0.05, 0.15, 0.15, 0.95, 1.0, 2.0};
  const auto h = histogram(v, 0.0, 1.0, 10);
  CHECK(h.counts[0] == 1);
  CHECK(h.counts[1] == 2);
  CHECK(h.counts[9] == 2);
  const auto csv = histogram_csv(h);
  CHECK(csv.rfind("bin_lo,bin_hi,count\n0,0.10000000000000001,1\n", 0) == 0);
  CHECK_THROWS_AS(histogram(v, 1.0, 1.0, 3), std::invalid_argument);
}
