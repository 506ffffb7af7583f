#include "lieconc/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lieconc {

std::vector<double> ricci_bound_sequence(AlgebraKind kind, int first, int last,
                                         std::optional<double> coroot_length) {
  if (first > last) throw std::invalid_argument("ricci_bound_sequence: empty range");
  const int lo = kind == AlgebraKind::Unitary ? 2 : kind == AlgebraKind::Orthogonal ? 3 : 1;
  if (first < lo) throw std::invalid_argument("ricci_bound_sequence: range starts below the family minimum");
  if (coroot_length && kind != AlgebraKind::Unitary)
    throw std::invalid_argument("ricci_bound_sequence: coroot rescaling is defined for SU only");
  if (coroot_length && *coroot_length <= 0.0)
    throw std::invalid_argument("ricci_bound_sequence: coroot length must be positive");

  std::vector<double> out;
  for (int i = first; i <= last; ++i) {
    const double di = i;
    if (coroot_length) {
      out.push_back((di + 2) / (*coroot_length * *coroot_length));
      continue;
    }
    switch (kind) {
      case AlgebraKind::Unitary: out.push_back((di + 2) / 4); break;
      case AlgebraKind::Orthogonal: out.push_back((di - 2) / 4); break;
      case AlgebraKind::Symplectic: out.push_back((di + 1) / 2); break;
    }
  }
  return out;
}

RescaledLevyCheck rescaled_levy_check(std::span<const double> ricci, std::span<const double> scales,
                                      double floor, double margin) {
  if (ricci.size() != scales.size()) throw std::invalid_argument("rescaled_levy_check: length mismatch");
  if (floor <= 0.0) throw std::invalid_argument("rescaled_levy_check: floor must be positive");
  RescaledLevyCheck r;
  for (size_t i = 0; i < ricci.size(); ++i) r.rescaled.push_back(scales[i] * ricci[i]);
  if (ricci.size() < 2) return r;

  const size_t tail = ricci.size() / 2;
  r.bounded_below = std::all_of(ricci.begin() + static_cast<std::ptrdiff_t>(tail), ricci.end(),
                                [floor](double v) { return v >= floor; });
  const double prior = *std::max_element(scales.begin(), scales.end() - 1);
  r.diverges = scales.back() > prior + margin;
  r.levy = r.bounded_below && r.diverges;
  return r;
}

double multi_locus_bound(double n, double count, double eps) {
  if (n < 1 || count < 1) throw std::invalid_argument("multi_locus_bound: n and N must be >= 1");
  if (eps <= 0) throw std::invalid_argument("multi_locus_bound: eps must be positive");
  return count * std::exp(-n * eps * eps / count);
}

bool codim_growth_ok(std::span<const double> counts, std::span<const double> n_values) {
  if (counts.size() != n_values.size() || counts.size() < 2)
    throw std::invalid_argument("codim_growth_ok: need two or more paired samples");
  std::vector<double> g;
  for (size_t i = 0; i < counts.size(); ++i) g.push_back(counts[i] * std::log(n_values[i]) / n_values[i]);
  for (size_t i = 1; i < g.size(); ++i)
    if (!(g[i] < g[i - 1])) return false;
  return g.back() <= 0.5 * g.front();
}

std::vector<double> rate_threshold_products(std::span<const double> eps, std::span<const double> n_values) {
  if (eps.size() != n_values.size()) throw std::invalid_argument("rate_threshold_products: length mismatch");
  std::vector<double> out;
  for (size_t i = 0; i < eps.size(); ++i) out.push_back(std::sqrt(n_values[i]) * eps[i]);
  return out;
}

}  // namespace lieconc
