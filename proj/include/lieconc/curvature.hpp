#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "lieconc/lie_basis.hpp"

namespace lieconc {

/// Structure constants c_{ij}^k of [T_i, T_j] = Σ_k c_{ij}^k T_k.
///
/// Stored densely (the algebras handled here are at most a few hundred
/// dimensional); c_{ji}^k = -c_{ij}^k holds bit-for-bit.
class StructureTensor {
public:
  struct Entry {
    int i, j, k;
    double value;
  };

  StructureTensor() = default;
  explicit StructureTensor(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }
  /// Sets c_{ij}^k and c_{ji}^k = -value together.
  void set(int i, int j, int k, double value);
  /// Non-zero entries with i < j.
  std::vector<Entry> entries() const;

private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_ = 0;
  std::vector<double> c_;
};

/// Entries below this magnitude are dropped when projecting commutators.
inline constexpr double kStructureZero = 1e-12;

/// c_{ij}^k = -½ Tr([T_i, T_j] T_k). Throws std::invalid_argument if the basis
/// is not orthonormal to 1e-12.
StructureTensor structure_constants(const LieAlgebraBasis& basis);

/// Largest |c_{ijk} + c_{ikj}| with indices lowered by δ (total antisymmetry).
double total_antisymmetry_defect(const StructureTensor& st);

/// Largest Jacobi residual over `samples` random (i,j,k,l) quadruples.
double jacobi_residual(const StructureTensor& st, int samples, std::uint64_t seed);

/// (ad_i)_{kj} = c_{ij}^k
Eigen::MatrixXd adjoint_matrix(const StructureTensor& st, int i);

/// K_ij = Σ_{s,t} c_{is}^t c_{jt}^s
Eigen::MatrixXd killing_by_structure_sum(const StructureTensor& st);
/// K_ij = Tr(ad_i ad_j)
Eigen::MatrixXd killing_by_adjoint_trace(const StructureTensor& st);

/// Killing matrix via the structure-constant sum, after checking that the
/// adjoint-trace route agrees to 1e-9 (std::runtime_error otherwise).
Eigen::MatrixXd killing_form(const StructureTensor& st);

struct ChiResult {
  double chi = 0.0;            // -½ Tr(ad_{T_1}²)
  double killing_scale = 0.0;  // χ' in K = -χ' · 1
  double diagonal_spread = 0;  // max |K_ii + χ'|
  double off_diagonal = 0;     // max |K_ij|, i ≠ j
};

/// Throws std::runtime_error when the Killing matrix is not a multiple of the
/// identity to 1e-9 (non-simple or non-orthonormal input).
ChiResult chi_coefficient(const StructureTensor& st);

/// Value of χ printed for the family: su(n): n+2, so(n): n-2, usp(2n): 2n+2.
double published_chi(AlgebraKind kind, int size);

/// R^k_{jlm} = ¼ Σ_s c_{lm}^s c_{js}^k
double riemann_component(const StructureTensor& st, int k, int j, int l, int m);

/// Dense 4-index Riemann tensor, index order (k, j, l, m).
class RiemannTensor {
public:
  explicit RiemannTensor(const StructureTensor& st);
  int dim() const { return dim_; }
  double operator()(int k, int j, int l, int m) const {
    return r_[((static_cast<size_t>(k) * dim_ + j) * dim_ + l) * dim_ + m];
  }

private:
  int dim_;
  std::vector<double> r_;
};

/// Materializes the tensor; throws std::length_error above kMaxRiemannDim.
inline constexpr int kMaxRiemannDim = 64;
RiemannTensor riemann_tensor(const StructureTensor& st);

/// Ric_{jm} = Σ_k R^k_{jkm} by contraction of riemann_component, no Killing
/// form involved.
Eigen::MatrixXd ricci_by_contraction(const StructureTensor& st);

/// Contraction result, checked against -¼ K to 1e-9 (std::runtime_error).
Eigen::MatrixXd ricci_tensor(const StructureTensor& st);

struct CurvatureReport {
  AlgebraKind kind;
  int size = 0;
  int dim = 0;
  Eigen::MatrixXd killing;
  Eigen::MatrixXd ricci;
  ChiResult chi;
  double published_chi = 0.0;
  bool chi_matches_published = false;
  double killing_route_gap = 0.0;   // max |route a - route b|
  double ricci_killing_gap = 0.0;   // max |Ric + ¼K|
  double ricci_lower_bound = 0.0;   // inf Ric(τ,τ) over unit τ
  double orthonormality_defect = 0.0;
  double antisymmetry_defect = 0.0;
};

CurvatureReport curvature_report(const LieAlgebraBasis& basis);

/// Length of θ ↦ exp(θX), θ ∈ [0, 2π], in the metric -½ Tr(g⁻¹dg ⊗ g⁻¹dg),
/// from a discretized orbit with `steps` intervals.
double rotation_orbit_length(const Eigen::MatrixXcd& generator, int steps = 2000);

}  // namespace lieconc
