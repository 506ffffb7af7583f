#include "lieconc/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace lieconc {

HermitianExp::HermitianExp(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  vecs_ = es.eigenvectors();
  vals_ = es.eigenvalues();
}

Eigen::MatrixXcd HermitianExp::operator()(double t) const {
  Eigen::VectorXcd phases(vals_.size());
  for (Eigen::Index i = 0; i < vals_.size(); ++i) phases[i] = std::polar(1.0, t * vals_[i]);
  return vecs_ * phases.asDiagonal() * vecs_.adjoint();
}

Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& x) {
  const Eigen::MatrixXcd h = cplx(0, -1) * x;
  return HermitianExp(0.5 * (h + h.adjoint()))(1.0);
}

}  // namespace lieconc
