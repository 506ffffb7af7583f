#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

#include "lieconc/series.hpp"

namespace lieconc {

/// Which defining representation a basis lives in.
enum class AlgebraKind { Unitary, Orthogonal, Symplectic };

/// Ordered basis of anti-hermitian matrices in the defining representation,
/// orthonormal for the inner product -½ Tr(XY).
///
/// `size` is the family parameter: su(size), so(size), usp(2·size).
struct LieAlgebraBasis {
  AlgebraKind kind;
  int size = 0;
  std::vector<Eigen::MatrixXcd> elements;
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(elements.size()); }
  /// Position of a label such as "H_1" or "A^d_{1,2}"; throws std::out_of_range.
  int index_of(std::string_view label) const;
};

/// H_k, S_{k,j} = i(E_kj + E_jk), A_{k,j} = E_kj - E_jk, in that order. n ≥ 2.
LieAlgebraBasis unitary_basis(int n);
/// A_{k,j}, 1 ≤ k < j ≤ m. m ≥ 3.
LieAlgebraBasis orthogonal_basis(int m);
/// The nine symplectic families H, S^d, A^d, T, S^a, U, A^a in 2n×2n block form. n ≥ 1.
LieAlgebraBasis symplectic_basis(int n);

LieAlgebraBasis make_basis(AlgebraKind kind, int size);
/// A → su(n), B → so(2n+1), C → usp(2n), D → so(2n).
LieAlgebraBasis build_basis(const Series& series);

AlgebraKind parse_algebra_kind(std::string_view name);  // "su", "so", "usp"
std::string algebra_name(AlgebraKind kind, int size);   // "su(4)", "so(6)", "usp(8)"
/// Dimension of the algebra for the given family parameter.
int algebra_dim(AlgebraKind kind, int size);

/// Largest violation of -½ Tr(T_i T_j) = δ_ij.
double orthonormality_defect(const LieAlgebraBasis& basis);

/// Largest violation of the shape constraints of the family: anti-hermitian
/// everywhere, plus traceless (su), real (so), or [[A,B],[C,-Aᵀ]] with
/// B, C symmetric (usp).
double shape_defect(const LieAlgebraBasis& basis);

}  // namespace lieconc
