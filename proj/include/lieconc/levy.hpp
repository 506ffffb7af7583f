#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lieconc/lie_basis.hpp"

namespace lieconc {

/// R_i from the Ricci lower-bound table: (i+2)/4 for SU(i), (i-2)/4 for SO(i),
/// (i+1)/2 for USp(2i). With a coroot length (SU only) the relaxed form
/// (i+2)/|α̌|² is used instead.
std::vector<double> ricci_bound_sequence(AlgebraKind kind, int first, int last,
                                         std::optional<double> coroot_length = std::nullopt);

struct RescaledLevyCheck {
  bool levy = false;
  bool bounded_below = false;  // R_i ≥ floor on the tail of the window
  bool diverges = false;       // last c_i beats every earlier c_i by > margin
  std::vector<double> rescaled;  // c_i · R_i
};

/// Finite-window test of the rescaling criterion. "All but finitely many" is
/// read as: on the second half of the window.
RescaledLevyCheck rescaled_levy_check(std::span<const double> ricci, std::span<const double> scales,
                                      double floor, double margin = 0.0);

/// N · exp(-n ε² / N)
double multi_locus_bound(double n, double count, double eps);

/// True when N_n · log(n) / n is strictly decreasing over the sampled n and
/// has at least halved between the first and last sample.
bool codim_growth_ok(std::span<const double> counts, std::span<const double> n_values);

/// √n · ε_n for the sampled ranks; divergence of this product is the
/// threshold for the complement mass e^{-n ε_n²} to vanish.
std::vector<double> rate_threshold_products(std::span<const double> eps, std::span<const double> n_values);

}  // namespace lieconc
