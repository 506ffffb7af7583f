#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "lieconc/curvature.hpp"
#include "lieconc/linalg.hpp"

using namespace lieconc;

namespace {

double c(const LieAlgebraBasis& b, const StructureTensor& st, const char* i, const char* j, const char* k) {
  return st(b.index_of(i), b.index_of(j), b.index_of(k));
}

bool is_scalar(const Eigen::MatrixXd& m, double value, double tol = 1e-9) {
  return (m - value * Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

TEST_CASE("bases are orthonormal and of the right shape") {
  for (int n = 2; n <= 12; ++n) {
    const auto b = unitary_basis(n);
    CHECK(b.dim() == n * n - 1);
    CHECK(orthonormality_defect(b) < 1e-12);
    CHECK(shape_defect(b) < 1e-12);
  }
  for (int m = 3; m <= 16; ++m) {
    const auto b = orthogonal_basis(m);
    CHECK(b.dim() == m * (m - 1) / 2);
    CHECK(orthonormality_defect(b) < 1e-12);
    CHECK(shape_defect(b) < 1e-12);
  }
  for (int n = 1; n <= 8; ++n) {
    const auto b = symplectic_basis(n);
    CHECK(b.dim() == n * (2 * n + 1));
    CHECK(orthonormality_defect(b) < 1e-12);
    CHECK(shape_defect(b) < 1e-12);
  }
  CHECK_THROWS_AS(unitary_basis(1), std::invalid_argument);
  CHECK_THROWS_AS(orthogonal_basis(2), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_basis(0), std::invalid_argument);
  CHECK(build_basis({SeriesTag::B, 2}).size == 5);
  CHECK(build_basis({SeriesTag::D, 4}).dim() == 28);
}

TEST_CASE("non-orthonormal input is rejected") {
  auto b = unitary_basis(3);
  b.elements[0] *= 2.0;
  CHECK_THROWS_AS(structure_constants(b), std::invalid_argument);
}

TEST_CASE("structure constant spot values") {
  const auto su = unitary_basis(4);
  const auto st = structure_constants(su);
  CHECK(c(su, st, "H_1", "A_{1,2}", "S_{1,2}") == doctest::Approx(2.0));
  for (int j = 3; j <= 4; ++j) {
    const std::string a1j = "A_{1," + std::to_string(j) + "}", a2j = "A_{2," + std::to_string(j) + "}";
    CHECK(c(su, st, "A_{1,2}", a1j.c_str(), a2j.c_str()) == doctest::Approx(-1.0));
  }
  const auto su2 = unitary_basis(2);
  const auto st2 = structure_constants(su2);
  CHECK(c(su2, st2, "H_1", "A_{1,2}", "S_{1,2}") == doctest::Approx(2.0));
  CHECK(c(su2, st2, "H_1", "S_{1,2}", "A_{1,2}") == doctest::Approx(-2.0));
  CHECK(c(su2, st2, "S_{1,2}", "A_{1,2}", "H_1") == doctest::Approx(-2.0));

  const auto so = orthogonal_basis(5);
  const auto sts = structure_constants(so);
  CHECK(c(so, sts, "A_{1,2}", "A_{1,3}", "A_{2,3}") == doctest::Approx(-1.0));

  const auto sp = symplectic_basis(3);
  const auto stp = structure_constants(sp);
  CHECK(c(sp, stp, "H_1", "T_1", "U_1") == doctest::Approx(-2.0));
  CHECK(c(sp, stp, "T_1", "H_1", "U_1") == doctest::Approx(2.0));
}

TEST_CASE("total antisymmetry and Jacobi") {
  const LieAlgebraBasis bases[] = {unitary_basis(5), orthogonal_basis(7), symplectic_basis(3)};
  for (const auto& b : bases) {
    const auto st = structure_constants(b);
    CHECK(total_antisymmetry_defect(st) < 1e-12);
    CHECK(jacobi_residual(st, 10000, 17) < 1e-10);
  }
}

TEST_CASE("Killing form examples") {
  const auto so5 = structure_constants(orthogonal_basis(5));
  CHECK(is_scalar(killing_form(so5), -6.0));
  const auto usp4 = structure_constants(symplectic_basis(2));
  CHECK(is_scalar(killing_form(usp4), -12.0));
  CHECK((killing_by_structure_sum(usp4) - killing_by_adjoint_trace(usp4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("chi coefficient") {
  CHECK(chi_coefficient(structure_constants(orthogonal_basis(6))).chi == doctest::Approx(4.0));
  CHECK(chi_coefficient(structure_constants(symplectic_basis(3))).chi == doctest::Approx(8.0));
  // su(n): the brute-force value is 2n, which differs from n+2 once n > 2
  const auto su4 = chi_coefficient(structure_constants(unitary_basis(4)));
  CHECK(su4.chi == doctest::Approx(8.0));
  CHECK(su4.killing_scale == doctest::Approx(16.0));
  CHECK(published_chi(AlgebraKind::Unitary, 4) == 6.0);
  CHECK(chi_coefficient(structure_constants(unitary_basis(2))).chi == doctest::Approx(published_chi(AlgebraKind::Unitary, 2)));

  for (int m = 3; m <= 10; ++m)
    CHECK(chi_coefficient(structure_constants(orthogonal_basis(m))).chi == doctest::Approx(m - 2.0));
  for (int n = 1; n <= 5; ++n)
    CHECK(chi_coefficient(structure_constants(symplectic_basis(n))).chi == doctest::Approx(2.0 * n + 2));
  for (int n = 2; n <= 7; ++n) {
    const auto r = chi_coefficient(structure_constants(unitary_basis(n)));
    CHECK(r.chi == doctest::Approx(2.0 * n));
    CHECK(r.killing_scale == doctest::Approx(2 * r.chi));
  }
}

TEST_CASE("Ricci by contraction equals -K/4") {
  const LieAlgebraBasis bases[] = {unitary_basis(2),   unitary_basis(3),   unitary_basis(4),
                                   orthogonal_basis(3), orthogonal_basis(6), orthogonal_basis(8),
                                   symplectic_basis(1), symplectic_basis(2), symplectic_basis(3)};
  for (const auto& b : bases) {
    const auto st = structure_constants(b);
    const auto ric = ricci_by_contraction(st);
    CHECK((ric + 0.25 * killing_form(st)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(is_scalar(ric, chi_coefficient(st).chi / 2));
  }
  CHECK(is_scalar(ricci_tensor(structure_constants(orthogonal_basis(6))), 2.0));
  CHECK(is_scalar(ricci_tensor(structure_constants(symplectic_basis(2))), 3.0));
}

TEST_CASE("Riemann tensor") {
  const auto b = unitary_basis(3);
  const auto st = structure_constants(b);
  const int h1 = b.index_of("H_1"), s12 = b.index_of("S_{1,2}"), a12 = b.index_of("A_{1,2}");
  CHECK(riemann_component(st, h1, s12, h1, s12) == doctest::Approx(1.0));
  CHECK(riemann_component(st, a12, s12, h1, s12) == doctest::Approx(0.0));

  const auto r = riemann_tensor(st);
  double worst_diag = 0, worst_anti = 0;
  for (int k = 0; k < r.dim(); ++k)
    for (int j = 0; j < r.dim(); ++j)
      for (int l = 0; l < r.dim(); ++l) {
        worst_diag = std::max(worst_diag, std::abs(r(k, j, l, l)));
        for (int m = 0; m < r.dim(); ++m) worst_anti = std::max(worst_anti, std::abs(r(k, j, l, m) + r(k, j, m, l)));
      }
  CHECK(worst_diag == 0.0);
  CHECK(worst_anti < 1e-14);
  CHECK_THROWS_AS(riemann_tensor(structure_constants(unitary_basis(9))), std::length_error);
}

TEST_CASE("abelian input gives zero curvature") {
  StructureTensor zero(4);
  CHECK(ricci_by_contraction(zero).cwiseAbs().maxCoeff() == 0.0);
  CHECK(killing_form(zero).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("curvature report") {
  const auto r = curvature_report(unitary_basis(3));
  CHECK(r.dim == 8);
  CHECK(r.chi.chi == doctest::Approx(6.0));
  CHECK_FALSE(r.chi_matches_published);
  CHECK(r.ricci_lower_bound == doctest::Approx(3.0));
  CHECK(r.killing_route_gap < 1e-12);
  CHECK(r.ricci_killing_gap < 1e-12);
  CHECK(curvature_report(orthogonal_basis(6)).chi_matches_published);
}

TEST_CASE("one-parameter subgroup has length 2π") {
  const auto b = unitary_basis(2);
  for (const char* g : {"H_1", "S_{1,2}", "A_{1,2}"})
    CHECK(std::abs(rotation_orbit_length(b.elements[b.index_of(g)]) - 2 * std::numbers::pi) < 1e-6);
  const auto so = orthogonal_basis(4);
  CHECK(std::abs(rotation_orbit_length(so.elements[so.index_of("A_{2,4}")]) - 2 * std::numbers::pi) < 1e-6);
}

TEST_CASE("property: bracket expansion reproduces the commutator") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> fam(0, 2), sz(2, 5);
  for (int trial = 0; trial < 12; ++trial) {
    const auto kind = static_cast<AlgebraKind>(fam(rng));
    const int size = kind == AlgebraKind::Orthogonal ? sz(rng) + 1 : kind == AlgebraKind::Symplectic ? sz(rng) - 1 : sz(rng);
    const auto b = make_basis(kind, size);
    const auto st = structure_constants(b);
    std::uniform_int_distribution<int> pick(0, b.dim() - 1);
    const int i = pick(rng), j = pick(rng);
    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(b.elements[0].rows(), b.elements[0].cols());
    for (int k = 0; k < b.dim(); ++k) rebuilt += st(i, j, k) * b.elements[k];
    CHECK((rebuilt - commutator(b.elements[i], b.elements[j])).cwiseAbs().maxCoeff() < 1e-12);
  }
}
