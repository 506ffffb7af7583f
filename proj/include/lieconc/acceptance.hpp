#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lieconc {

struct AcceptanceOptions {
  bool quick = false;           // smaller Monte Carlo runs for criteria 5 and 6
  std::uint64_t seed = 20231;
  int workers = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;          // tolerance met and runtime within budget
  bool within_budget = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<std::string> details;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);

/// All criteria in order; `progress` is called after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// "criterion 3 PASS  curvature identities  (0.41 s / 30 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace lieconc
