#include "lieconc/root_system.hpp"

#include <stdexcept>
#include <utility>

namespace lieconc {

namespace {

RationalVector unit(int dim, int i) {
  RationalVector v(static_cast<size_t>(dim), mpq_class(0));
  v[static_cast<size_t>(i)] = 1;
  return v;
}

RationalVector combo(int dim, int i, int j, int sign) {
  RationalVector v = unit(dim, i);
  v[static_cast<size_t>(j)] += sign;
  return v;
}

RationalVector scaled(RationalVector v, const mpq_class& c) {
  for (auto& x : v) x *= c;
  return v;
}

}  // namespace

mpq_class inner(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector coroot(const RationalVector& alpha) {
  const mpq_class len2 = inner(alpha, alpha);
  if (sgn(len2) == 0) throw std::invalid_argument("coroot of the zero vector");
  return scaled(alpha, mpq_class(2) / len2);
}

mpq_class gram_determinant(const std::vector<RationalVector>& vs) {
  const size_t r = vs.size();
  std::vector<std::vector<mpq_class>> g(r, std::vector<mpq_class>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) g[i][j] = inner(vs[i], vs[j]);

  mpq_class det = 1;
  for (size_t c = 0; c < r; ++c) {
    size_t piv = c;
    while (piv < r && sgn(g[piv][c]) == 0) ++piv;
    if (piv == r) return 0;
    if (piv != c) {
      std::swap(g[piv], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (size_t i = c + 1; i < r; ++i) {
      if (sgn(g[i][c]) == 0) continue;
      const mpq_class f = g[i][c] / g[c][c];
      for (size_t j = c; j < r; ++j) g[i][j] -= f * g[c][j];
    }
  }
  return det;
}

RootSystem build_root_system(const Series& series) {
  const Series s = make_series(series.tag, series.n);
  const int n = s.n;
  RootSystem rs;
  rs.series = s;
  rs.rank = rank(s);
  rs.ambient_dim = n;

  for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(combo(n, i, i + 1, -1));
  switch (s.tag) {
    case SeriesTag::A: break;
    case SeriesTag::B: rs.simple_roots.push_back(unit(n, n - 1)); break;
    case SeriesTag::C: rs.simple_roots.push_back(scaled(unit(n, n - 1), 2)); break;
    case SeriesTag::D: rs.simple_roots.push_back(combo(n, n - 2, n - 1, +1)); break;
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rs.positive_roots.push_back(combo(n, i, j, -1));
  if (s.tag != SeriesTag::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) rs.positive_roots.push_back(combo(n, i, j, +1));
  }
  if (s.tag == SeriesTag::B)
    for (int i = 0; i < n; ++i) rs.positive_roots.push_back(unit(n, i));
  if (s.tag == SeriesTag::C)
    for (int i = 0; i < n; ++i) rs.positive_roots.push_back(scaled(unit(n, i), 2));

  for (const auto& a : rs.positive_roots) rs.coroots.push_back(coroot(a));
  for (const auto& a : rs.simple_roots) rs.simple_coroots.push_back(coroot(a));

  for (int i = 1; i <= rs.rank; ++i) {
    switch (s.tag) {
      case SeriesTag::A: rs.degrees.push_back(i + 1); break;
      case SeriesTag::B:
      case SeriesTag::C: rs.degrees.push_back(2 * i); break;
      case SeriesTag::D: rs.degrees.push_back(i < n ? 2 * i : n); break;
    }
  }
  return rs;
}

ExactScalar torus_volume(const RootSystem& rs) {
  return ExactScalar::sqrt_of(gram_determinant(rs.simple_coroots));
}

ExactScalar coroot_norm_product(const RootSystem& rs) {
  mpq_class p = 1;
  for (const auto& c : rs.coroots) p *= inner(c, c);
  return ExactScalar(p);
}

}  // namespace lieconc
