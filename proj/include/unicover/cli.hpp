#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace unicover::cli {

// Exit codes: 0 all requested checks pass, 1 semantic failure (with a
// witness in the report), 2 input error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

struct RunConfig {
  std::string input_path;
  std::string output_path;  // run_shrink: where the closed cover goes
  long prime = 2;
  long depth = 1;
  std::uint64_t seed = 0;
  double scale = 0.25;          // selftest instance scaling
  std::string format = "text";  // "text" or "json"
};

// Axiom checks on a set-system file: C1 (by the generated-structure
// reading), C2 and its variants, C3, S1/S2 when shrinks are supplied,
// entourage axioms and round trips when entourages are supplied, and the
// base-from-topology hypotheses when a region base is supplied.
int run_check(const RunConfig& config, std::ostream& out, std::ostream& err);

// Shrinks an open Laurent cover into a closed precise refinement and
// writes it in the input schema, reporting the per-step tightenings and
// the verification results.
int run_shrink(const RunConfig& config, std::ostream& out, std::ostream& err);

// The residue tower completion demo: prints the completion size and the
// residue table, and checks the p^N counting law.
int run_complete(const RunConfig& config, std::ostream& out, std::ostream& err);

// Classifies a nested-disk prefix.
int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Runs the randomized property suites at the configured seed and scale.
int run_selftest(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace unicover::cli
