#include "lieconc/curvature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lieconc/linalg.hpp"

namespace lieconc {

namespace {

struct Triplet {
  int row, col;
  cplx value;
};

std::vector<Triplet> sparse_of(const Eigen::MatrixXcd& m) {
  std::vector<Triplet> out;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > 0.0) out.push_back({static_cast<int>(r), static_cast<int>(c), m(r, c)});
  return out;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

StructureTensor::StructureTensor(int dim) : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim, 0.0) {}

void StructureTensor::set(int i, int j, int k, double value) {
  c_[index(i, j, k)] = value;
  c_[index(j, i, k)] = -value;
}

std::vector<StructureTensor::Entry> StructureTensor::entries() const {
  std::vector<Entry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (const double v = (*this)(i, j, k); v != 0.0) out.push_back({i, j, k, v});
  return out;
}

StructureTensor structure_constants(const LieAlgebraBasis& basis) {
  if (const double defect = orthonormality_defect(basis); defect > 1e-12)
    throw std::invalid_argument("structure_constants: basis is not orthonormal (defect " +
                                std::to_string(defect) + ")");
  const int d = basis.dim();
  std::vector<std::vector<Triplet>> sparse;
  sparse.reserve(static_cast<size_t>(d));
  for (const auto& e : basis.elements) sparse.push_back(sparse_of(e));

  StructureTensor st(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Eigen::MatrixXcd br = commutator(basis.elements[i], basis.elements[j]);
      if (br.cwiseAbs().maxCoeff() < kStructureZero) continue;
      for (int k = 0; k < d; ++k) {
        // -½ Tr(C T_k) = -½ Σ_{r,c} C(c,r) T_k(r,c)
        cplx acc = 0.0;
        for (const auto& t : sparse[static_cast<size_t>(k)]) acc += br(t.col, t.row) * t.value;
        const double v = -0.5 * acc.real();
        if (std::abs(v) >= kStructureZero) st.set(i, j, k, v);
      }
    }
  }
  return st;
}

double total_antisymmetry_defect(const StructureTensor& st) {
  double worst = 0.0;
  const int d = st.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        worst = std::max(worst, std::abs(st(i, j, k) + st(j, i, k)));
        worst = std::max(worst, std::abs(st(i, j, k) + st(i, k, j)));
      }
  return worst;
}

double jacobi_residual(const StructureTensor& st, int samples, std::uint64_t seed) {
  const int d = st.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    const int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
    double acc = 0.0;
    for (int m = 0; m < d; ++m)
      acc += st(i, j, m) * st(m, k, l) + st(j, k, m) * st(m, i, l) + st(k, i, m) * st(m, j, l);
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

Eigen::MatrixXd adjoint_matrix(const StructureTensor& st, int i) {
  const int d = st.dim();
  Eigen::MatrixXd ad(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) ad(k, j) = st(i, j, k);
  return ad;
}

Eigen::MatrixXd killing_by_structure_sum(const StructureTensor& st) {
  const int d = st.dim();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double acc = 0.0;
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) acc += st(i, s, t) * st(j, t, s);
      k(i, j) = k(j, i) = acc;
    }
  return k;
}

Eigen::MatrixXd killing_by_adjoint_trace(const StructureTensor& st) {
  const int d = st.dim();
  std::vector<Eigen::MatrixXd> ads;
  ads.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) ads.push_back(adjoint_matrix(st, i));
  Eigen::MatrixXd k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) k(i, j) = (ads[i].array() * ads[j].transpose().array()).sum();
  return k;
}

Eigen::MatrixXd killing_form(const StructureTensor& st) {
  Eigen::MatrixXd a = killing_by_structure_sum(st);
  const Eigen::MatrixXd b = killing_by_adjoint_trace(st);
  if (const double gap = max_abs_diff(a, b); gap > 1e-9)
    throw std::runtime_error("killing_form: routes disagree by " + std::to_string(gap));
  return a;
}

ChiResult chi_coefficient(const StructureTensor& st) {
  const Eigen::MatrixXd k = killing_form(st);
  const Eigen::MatrixXd ad1 = adjoint_matrix(st, 0);
  ChiResult r;
  r.chi = -0.5 * (ad1 * ad1).trace();
  r.killing_scale = -k.diagonal().mean();
  r.diagonal_spread = (k.diagonal().array() + r.killing_scale).abs().maxCoeff();
  Eigen::MatrixXd off = k;
  off.diagonal().setZero();
  r.off_diagonal = off.cwiseAbs().maxCoeff();
  if (r.diagonal_spread > 1e-9 || r.off_diagonal > 1e-9)
    throw std::runtime_error("chi_coefficient: Killing matrix is not a multiple of the identity");
  return r;
}

double published_chi(AlgebraKind kind, int size) {
  switch (kind) {
    case AlgebraKind::Unitary: return size + 2.0;
    case AlgebraKind::Orthogonal: return size - 2.0;
    case AlgebraKind::Symplectic: return 2.0 * size + 2.0;
  }
  return 0.0;
}

double riemann_component(const StructureTensor& st, int k, int j, int l, int m) {
  double acc = 0.0;
  for (int s = 0; s < st.dim(); ++s) {
    const double a = st(l, m, s);
    if (a != 0.0) acc += a * st(j, s, k);
  }
  return 0.25 * acc;
}

RiemannTensor::RiemannTensor(const StructureTensor& st)
    : dim_(st.dim()), r_(static_cast<size_t>(dim_) * dim_ * dim_ * dim_, 0.0) {
  for (int k = 0; k < dim_; ++k)
    for (int j = 0; j < dim_; ++j)
      for (int l = 0; l < dim_; ++l)
        for (int m = 0; m < dim_; ++m)
          r_[((static_cast<size_t>(k) * dim_ + j) * dim_ + l) * dim_ + m] = riemann_component(st, k, j, l, m);
}

RiemannTensor riemann_tensor(const StructureTensor& st) {
  if (st.dim() > kMaxRiemannDim)
    throw std::length_error("riemann_tensor: dimension too large to materialize; use riemann_component");
  return RiemannTensor(st);
}

Eigen::MatrixXd ricci_by_contraction(const StructureTensor& st) {
  const int d = st.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int m = 0; m < d; ++m) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k) acc += riemann_component(st, k, j, k, m);
      ric(j, m) = acc;
    }
  return ric;
}

Eigen::MatrixXd ricci_tensor(const StructureTensor& st) {
  Eigen::MatrixXd ric = ricci_by_contraction(st);
  const Eigen::MatrixXd k = killing_form(st);
  if (const double gap = max_abs_diff(ric, -0.25 * k); gap > 1e-9)
    throw std::runtime_error("ricci_tensor: contraction differs from -K/4 by " + std::to_string(gap));
  return ric;
}

CurvatureReport curvature_report(const LieAlgebraBasis& basis) {
  CurvatureReport r{basis.kind, basis.size, basis.dim(), {}, {}, {}, 0, false, 0, 0, 0, 0, 0};
  r.orthonormality_defect = orthonormality_defect(basis);
  const StructureTensor st = structure_constants(basis);
  r.antisymmetry_defect = total_antisymmetry_defect(st);
  r.killing = killing_by_structure_sum(st);
  r.killing_route_gap = max_abs_diff(r.killing, killing_by_adjoint_trace(st));
  r.ricci = ricci_by_contraction(st);
  r.ricci_killing_gap = max_abs_diff(r.ricci, -0.25 * r.killing);
  r.chi = chi_coefficient(st);
  r.published_chi = published_chi(basis.kind, basis.size);
  r.chi_matches_published = std::abs(r.chi.chi - r.published_chi) < 1e-9;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (r.ricci + r.ricci.transpose()),
                                                    Eigen::EigenvaluesOnly);
  r.ricci_lower_bound = es.eigenvalues().minCoeff();
  return r;
}

double rotation_orbit_length(const Eigen::MatrixXcd& generator, int steps) {
  if (steps < 2) throw std::invalid_argument("rotation_orbit_length: need at least 2 steps");
  const HermitianExp flow(cplx(0, -1) * generator);  // exp(θX) = exp(iθ(-iX))
  const double period = 2 * std::numbers::pi;
  const double dh = 1e-5;
  auto speed = [&](double theta) {
    const Eigen::MatrixXcd g = flow(theta);
    const Eigen::MatrixXcd v = g.adjoint() * (flow(theta + dh) - flow(theta - dh)) / (2 * dh);
    return std::sqrt(std::max(0.0, -0.5 * trace_product(v, v).real()));
  };
  // composite Simpson on an even number of intervals
  const int n = steps % 2 ? steps + 1 : steps;
  const double h = period / n;
  double acc = speed(0.0) + speed(period);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * speed(i * h);
  return acc * h / 3.0;
}

}  // namespace lieconc
