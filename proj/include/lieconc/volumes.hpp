#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieconc/exact_scalar.hpp"
#include "lieconc/series.hpp"

namespace lieconc {

/// Ranks above this are only evaluated in log space.
inline constexpr int kExactRankLimit = 30;

struct VolumeResult {
  Series series;
  int center_order = 1;          // |Γ|
  std::optional<ExactScalar> exact;
  double log_value = 0.0;
};

/// V(S^{2d-1}) = 2 π^d / (d-1)!
ExactScalar sphere_volume(int d);

/// Macdonald's formula (1/|Γ|) V(T) ∏ V(S^{2d_i-1}) ∏ (α̌|α̌), assembled from
/// the root data. Always exact.
ExactScalar macdonald_volume(const Series& series, int center_order = 1);

/// Exact result (n ≤ kExactRankLimit) plus an independent log-gamma evaluation.
/// Throws std::invalid_argument when |Γ| does not divide the center order.
VolumeResult group_volume(const Series& series, int center_order = 1);

/// The four displayed closed forms for the simply connected groups, evaluated
/// directly (no root data involved).
ExactScalar closed_form_volume(const Series& series);

/// The closed form as displayed, unsimplified: "√5·(2π)^14/(1!·2!·3!·4!)".
std::string closed_form_text(const Series& series);
/// ln V of the simply connected group via log-gamma.
double log_volume(const Series& series);

/// Closed-form log volume with no rank validation; used for the predecessor
/// rank inside ratio_exponent.
double log_closed_form(SeriesTag tag, int n);

/// Dimension step paired with the consecutive-volume ratio:
/// A: 2n+1 (SU(n+1) vs SU(n)); B, C: 4n-1 and D: 4n-3 (rank n vs rank n-1).
int ratio_dim_step(const Series& series);

/// (V_big / V_small)^{1/Δdim} computed in log space.
double ratio_exponent(const Series& series);

/// Leading asymptote √(2πe/m) with m = n (A) or 2n (B, C, D).
double ratio_asymptote(const Series& series);

/// Known discrepancies worth echoing in reports for this series.
std::vector<std::string> series_notes(const Series& series);

}  // namespace lieconc
