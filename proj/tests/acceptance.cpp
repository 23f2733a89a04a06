// Acceptance gate: runs every criterion at full scale and prints one
// pass/fail line each.  Exits nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "unicover/selfcheck.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240901;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));

  bool all_pass = true;
  for (const auto& r : unicover::run_acceptance(seed, 1.0)) {
    all_pass = all_pass && r.pass;
    std::printf("[%s] %2d %-58s %7.2fs/%.0fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.budget_seconds, r.detail.c_str());
  }
  return all_pass ? 0 : 1;
}
