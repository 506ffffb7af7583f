#include "lieconc/lie_basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "lieconc/linalg.hpp"

namespace lieconc {

namespace {

using Eigen::MatrixXcd;

constexpr cplx kI{0.0, 1.0};

// E_{r,c} with 1-based indices.
MatrixXcd unit(int dim, int r, int c) {
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  m(r - 1, c - 1) = 1.0;
  return m;
}

std::string pair_label(const std::string& head, int i, int j) {
  return head + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

int LieAlgebraBasis::index_of(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no basis element labelled " + std::string(label));
  return static_cast<int>(it - labels.begin());
}

LieAlgebraBasis unitary_basis(int n) {
  if (n < 2) throw std::invalid_argument("su(n) needs n >= 2");
  LieAlgebraBasis b{AlgebraKind::Unitary, n, {}, {}};
  for (int k = 1; k < n; ++k) {
    MatrixXcd h = MatrixXcd::Zero(n, n);
    for (int a = 1; a <= k; ++a) h(a - 1, a - 1) = 1.0;
    h(k, k) = -static_cast<double>(k);
    b.elements.push_back(kI * std::sqrt(2.0 / (k * k + k)) * h);
    b.labels.push_back("H_" + std::to_string(k));
  }
  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n; ++j) {
      b.elements.push_back(kI * (unit(n, k, j) + unit(n, j, k)));
      b.labels.push_back(pair_label("S", k, j));
    }
  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n; ++j) {
      b.elements.push_back(unit(n, k, j) - unit(n, j, k));
      b.labels.push_back(pair_label("A", k, j));
    }
  return b;
}

LieAlgebraBasis orthogonal_basis(int m) {
  if (m < 3) throw std::invalid_argument("so(m) needs m >= 3");
  LieAlgebraBasis b{AlgebraKind::Orthogonal, m, {}, {}};
  for (int k = 1; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j) {
      b.elements.push_back(unit(m, k, j) - unit(m, j, k));
      b.labels.push_back(pair_label("A", k, j));
    }
  return b;
}

LieAlgebraBasis symplectic_basis(int n) {
  if (n < 1) throw std::invalid_argument("usp(2n) needs n >= 1");
  const int d = 2 * n;
  const double r = 1.0 / std::sqrt(2.0);
  LieAlgebraBasis b{AlgebraKind::Symplectic, n, {}, {}};
  auto add = [&b](MatrixXcd m, std::string label) {
    b.elements.push_back(std::move(m));
    b.labels.push_back(std::move(label));
  };
  for (int a = 1; a <= n; ++a) add(kI * (unit(d, a, a) - unit(d, a + n, a + n)), "H_" + std::to_string(a));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add(kI * r * (unit(d, i, j) + unit(d, j, i) - unit(d, i + n, j + n) - unit(d, j + n, i + n)),
          pair_label("S^d", i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add(r * (unit(d, i, j) - unit(d, j, i) + unit(d, i + n, j + n) - unit(d, j + n, i + n)),
          pair_label("A^d", i, j));
  for (int a = 1; a <= n; ++a) add(kI * (unit(d, a, a + n) + unit(d, a + n, a)), "T_" + std::to_string(a));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add(kI * r * (unit(d, i, j + n) + unit(d, j, i + n) + unit(d, i + n, j) + unit(d, j + n, i)),
          pair_label("S^a", i, j));
  for (int a = 1; a <= n; ++a) add(unit(d, a, a + n) - unit(d, a + n, a), "U_" + std::to_string(a));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add(r * (unit(d, i, j + n) + unit(d, j, i + n) - unit(d, i + n, j) - unit(d, j + n, i)),
          pair_label("A^a", i, j));
  return b;
}

LieAlgebraBasis make_basis(AlgebraKind kind, int size) {
  switch (kind) {
    case AlgebraKind::Unitary: return unitary_basis(size);
    case AlgebraKind::Orthogonal: return orthogonal_basis(size);
    case AlgebraKind::Symplectic: return symplectic_basis(size);
  }
  throw std::logic_error("unreachable algebra kind");
}

LieAlgebraBasis build_basis(const Series& series) {
  const Series s = make_series(series.tag, series.n);
  switch (s.tag) {
    case SeriesTag::A: return unitary_basis(s.n);
    case SeriesTag::B: return orthogonal_basis(2 * s.n + 1);
    case SeriesTag::C: return symplectic_basis(s.n);
    case SeriesTag::D: return orthogonal_basis(2 * s.n);
  }
  throw std::logic_error("unreachable series tag");
}

AlgebraKind parse_algebra_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "su" || s == "a") return AlgebraKind::Unitary;
  if (s == "so") return AlgebraKind::Orthogonal;
  if (s == "usp" || s == "c") return AlgebraKind::Symplectic;
  throw std::invalid_argument("unknown algebra family '" + std::string(name) + "'");
}

std::string algebra_name(AlgebraKind kind, int size) {
  switch (kind) {
    case AlgebraKind::Unitary: return "su(" + std::to_string(size) + ")";
    case AlgebraKind::Orthogonal: return "so(" + std::to_string(size) + ")";
    case AlgebraKind::Symplectic: return "usp(" + std::to_string(2 * size) + ")";
  }
  return "?";
}

int algebra_dim(AlgebraKind kind, int size) {
  switch (kind) {
    case AlgebraKind::Unitary: return size * size - 1;
    case AlgebraKind::Orthogonal: return size * (size - 1) / 2;
    case AlgebraKind::Symplectic: return size * (2 * size + 1);
  }
  return 0;
}

double orthonormality_defect(const LieAlgebraBasis& basis) {
  double worst = 0.0;
  for (int i = 0; i < basis.dim(); ++i)
    for (int j = i; j < basis.dim(); ++j) {
      const cplx g = -0.5 * trace_product(basis.elements[i], basis.elements[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double shape_defect(const LieAlgebraBasis& basis) {
  double worst = 0.0;
  for (const auto& x : basis.elements) {
    worst = std::max(worst, (x.adjoint() + x).cwiseAbs().maxCoeff());
    switch (basis.kind) {
      case AlgebraKind::Unitary: worst = std::max(worst, std::abs(x.trace())); break;
      case AlgebraKind::Orthogonal: worst = std::max(worst, x.imag().cwiseAbs().maxCoeff()); break;
      case AlgebraKind::Symplectic: {
        const int n = basis.size;
        const MatrixXcd a = x.topLeftCorner(n, n), bb = x.topRightCorner(n, n);
        const MatrixXcd c = x.bottomLeftCorner(n, n), d = x.bottomRightCorner(n, n);
        worst = std::max(worst, (d + a.transpose()).cwiseAbs().maxCoeff());
        worst = std::max(worst, (bb - bb.transpose()).cwiseAbs().maxCoeff());
        worst = std::max(worst, (c - c.transpose()).cwiseAbs().maxCoeff());
        break;
      }
    }
  }
  return worst;
}

}  // namespace lieconc
