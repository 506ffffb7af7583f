#pragma once

#include <Eigen/Dense>

#include <complex>

namespace lieconc {

using cplx = std::complex<double>;

/// exp(X) for anti-hermitian X via the eigendecomposition of the hermitian -iX.
/// The result is unitary up to rounding.
Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& x);

/// Same, with the eigendecomposition of a hermitian generator cached:
/// returns exp(i t H) for the decomposed H.
class HermitianExp {
public:
  explicit HermitianExp(const Eigen::MatrixXcd& h);
  Eigen::MatrixXcd operator()(double t) const;

private:
  Eigen::MatrixXcd vecs_;
  Eigen::VectorXd vals_;
};

/// Tr(A B) without forming the product.
inline cplx trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.array() * b.transpose().array()).sum();
}

inline Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

}  // namespace lieconc
