#pragma once

#include <gmpxx.h>

#include <vector>

#include "lieconc/exact_scalar.hpp"
#include "lieconc/series.hpp"

namespace lieconc {

using RationalVector = std::vector<mpq_class>;

/// Root data in the ambient R^n of the classical constructions. The A series
/// lives in the trace-zero hyperplane of R^n.
struct RootSystem {
  Series series;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RationalVector> simple_roots;
  std::vector<RationalVector> positive_roots;
  std::vector<RationalVector> coroots;  // coroots[i] belongs to positive_roots[i]
  std::vector<RationalVector> simple_coroots;
  std::vector<int> degrees;  // degrees of the fundamental invariants
};

mpq_class inner(const RationalVector& a, const RationalVector& b);

/// 2α/(α|α)
RationalVector coroot(const RationalVector& alpha);

/// Exact determinant of the Gram matrix (v_i|v_j).
mpq_class gram_determinant(const std::vector<RationalVector>& vs);

RootSystem build_root_system(const Series& series);

/// |α̌_1 ∧ … ∧ α̌_r| over the simple coroots, i.e. √det Gram.
ExactScalar torus_volume(const RootSystem& rs);

/// ∏ (α̌|α̌) over all positive coroots.
ExactScalar coroot_norm_product(const RootSystem& rs);

}  // namespace lieconc
