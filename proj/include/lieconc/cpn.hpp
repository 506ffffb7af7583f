#pragma once

#include <Eigen/Dense>

#include <vector>

#include "lieconc/exact_scalar.hpp"

namespace lieconc {

/// λ_1..λ_{m²-1} (index 0 holds λ_1). Built block by block: for k = 2..m the
/// pairs E_jk+E_kj, -i(E_jk-E_kj) for j < k, then the diagonal
/// √(2/(k(k-1)))·diag(1,…,1,-(k-1),0,…). Tr(λ_I λ_J) = 2δ_IJ.
std::vector<Eigen::MatrixXcd> gellmann_basis(int m);

/// Coordinates on SU(n+1)/U(n).
struct QuotientCoords {
  std::vector<double> thetas;
  std::vector<double> phis;

  int n() const { return static_cast<int>(thetas.size()); }
  /// θ_1, φ_1, θ_2, φ_2, … is the factor order of the product below.
  std::vector<double> flat() const;
  static QuotientCoords from_flat(const std::vector<double>& x);
};

/// ε_a = √(2/(a(a-1))), a ≥ 2
double cartan_epsilon(int a);

/// h = e^{iθ_1λ_3} e^{iφ_1λ_2} Π_{a=2}^n e^{i(θ_a/ε_a)λ_{a²-1}} e^{iφ_aλ_{a²+1}}
Eigen::MatrixXcd quotient_point(const QuotientCoords& c);

/// j_u = h⁻¹ ∂h/∂u for u = θ_1..θ_n, φ_1..φ_n (that order), differentiated
/// factor by factor.
std::vector<Eigen::MatrixXcd> maurer_cartan(const QuotientCoords& c);
/// Same by central differences of quotient_point; test oracle only.
std::vector<Eigen::MatrixXcd> maurer_cartan_fd(const QuotientCoords& c, double step = 1e-6);
/// max over u<v of |∂_u j_v - ∂_v j_u + [j_u, j_v]|, derivatives of the
/// analytic form taken by central differences.
double structure_equation_residual(const QuotientCoords& c, double step = 1e-5);

/// e^l_u = Im ½Tr(j_u λ_{n²+l-1}); rows l = 1..2n, columns θ_1..θ_n, φ_1..φ_n.
Eigen::MatrixXd vielbein(const QuotientCoords& c);
/// |det e|
double vielbein_density(const QuotientCoords& c);
/// 2 cos φ_n sin^{2n-1} φ_n Π_{a<n} sin φ_a cos^{2a-1} φ_a
double measure_density(const QuotientCoords& c);

/// The point h·e_{n+1} of CPⁿ, reordered so that the coordinate used as ζ_0
/// (the last entry of h e_{n+1}, of modulus cos φ_n) comes first.
Eigen::VectorXcd cpn_point(const QuotientCoords& c);

/// Domain of the chart and its provenance. θ periods come from the lattice of
/// θ-translations that leave the point of CPⁿ fixed; the metric scale from the
/// squared length of a coroot against -½Tr.
struct Calibration {
  int n = 0;
  Eigen::MatrixXi phase_matrix;  // (n+1)×n: phase of component i grows as Σ_a M_ia θ_a
  long phase_det = 0;            // |det| of the phases relative to ζ_0
  std::vector<double> theta_periods;
  double phi_max = 0.0;          // φ_a ∈ [0, phi_max]
  double density_integral = 0.0; // ∫ measure_density over the box
  double metric_scale = 0.0;     // Macdonald metric / (-½Tr) metric
  double volume_factor = 0.0;    // metric_scale^n
  ExactScalar quotient;          // V(SU(n+1)) / V(U(n))
  double relative_error = 0.0;   // |volume_factor·∫ - quotient| / quotient
};

Calibration calibrate(int n);

/// V(U(n)) = V(SU(n)) · 2π√(n(n+1)) / n in the metric -Tr on su(n+1): the
/// U(1) factor is the circle through diag(1,…,1,-n), which meets SU(n) in Z_n.
ExactScalar unitary_group_volume(int n);

/// (ξ, R, ψ) form of a point of the chart U_0.
struct AffineAngular {
  double xi = 0.0;
  Eigen::VectorXd r;    // on S^{n-1}
  Eigen::VectorXd psi;  // in [0, 2π)
};
struct AngularVelocity {
  double dxi = 0.0;
  Eigen::VectorXd dr;   // tangent: Σ R_i dR_i = 0
  Eigen::VectorXd dpsi;
};

/// z_i = tan ξ R_i e^{iψ_i}
Eigen::VectorXcd to_affine(const AffineAngular& a);
/// Inverse of to_affine; requires z ≠ 0.
AffineAngular to_angular(const Eigen::VectorXcd& z);

/// h_{ij̄} = δ_ij/(1+|z|²) - z̄_i z_j/(1+|z|²)², the coefficient of dz_i dz̄_j in ds².
Eigen::MatrixXcd fs_metric_affine(const Eigen::VectorXcd& z);
/// ∂²K/∂z_i∂z̄_j for K = ½log(1+|z|²) by central differences. With
/// ds² = 2 g_{ij̄} dz_i dz̄_j this is half of fs_metric_affine.
Eigen::MatrixXcd kahler_hessian_fd(const Eigen::VectorXcd& z, double step = 1e-4);
/// ds²(v) = Σ h_{ij̄} v_i v̄_j
double fs_line_element(const Eigen::VectorXcd& z, const Eigen::VectorXcd& v);

/// dξ² + sin²ξ[ΣdR² + ΣR²dψ²] - sin⁴ξ[ΣR²dψ]²; throws std::domain_error
/// unless 0 < ξ < π/2.
double fs_metric_angular(const AffineAngular& a, const AngularVelocity& v);
/// fs_line_element evaluated on the pushed-forward velocity dz.
double fs_metric_pullback(const AffineAngular& a, const AngularVelocity& v);

struct BandMass {
  double closed_form = 0.0;  // cos^{2n}ε / (2n)
  double quadrature = 0.0;   // ∫_0^{π/2-ε} cos φ sin^{2n-1} φ dφ
  double complement = 0.0;   // 1 - cos^{2n}ε, normalized mass within ε of the locus
};

/// Throws std::invalid_argument for n < 1 or ε outside [0, π/2].
BandMass band_mass(int n, double eps);

/// (0 : ζ_1 : … : ζ_n) normalized, the ξ → π/2 limit of the homogeneous point ζ.
/// Throws std::invalid_argument when ζ_1..ζ_n all vanish.
Eigen::VectorXcd locus_projection(const Eigen::VectorXcd& zeta);
/// Chart version: z ↦ (0 : z/|z|).
Eigen::VectorXcd locus_projection_chart(const Eigen::VectorXcd& z);
/// Fubini-Study distance arccos(|⟨ζ,η⟩| / |ζ||η|) ∈ [0, π/2].
double fs_distance(const Eigen::VectorXcd& zeta, const Eigen::VectorXcd& eta);

}  // namespace lieconc
