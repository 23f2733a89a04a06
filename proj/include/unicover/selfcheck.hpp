#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unicover {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/**
 * The ten randomized property suites gating this library, each exact (no
 * tolerances) and bounded by a wall-clock budget.  `scale` multiplies the
 * instance counts (1.0 = the full gate); the seed makes every run
 * reproducible.
 */
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, double scale = 1.0);

}  // namespace unicover
