#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unicover/cover.hpp"
#include "unicover/finite.hpp"

namespace unicover {

/**
 * A base candidate: a nonempty finite list of covers over one finite
 * carrier.  Whether it actually satisfies the base axioms is what the
 * checkers below decide; the generated structure (all covers refined by
 * some member) is only ever represented implicitly through this list.
 */
class CoverBase {
 public:
  CoverBase(FiniteSetAlgebra alg, std::vector<FiniteCover> covers);

  const FiniteSetAlgebra& alg() const { return alg_; }
  const std::vector<FiniteCover>& covers() const { return covers_; }
  std::size_t size() const { return covers_.size(); }
  const FiniteCover& operator[](std::size_t i) const { return covers_[i]; }

 private:
  FiniteSetAlgebra alg_;
  std::vector<FiniteCover> covers_;
};

// Membership in the structure generated by B: some member of B refines C.
bool is_uniform_cover(const FiniteCover& c, const CoverBase& base);

// One axiom verdict with a witness or counterexample in `detail`.
struct CheckItem {
  std::string axiom;
  bool holds = false;
  std::string detail;
};

struct BaseReport {
  CheckItem c2;         // every pair has a common star-refinement in B
  CheckItem c2a;        // B closed under cover intersection
  CheckItem c2b;        // every member has a star-refinement in B
  CheckItem c2_prime;   // delta form of C2
  CheckItem c2b_prime;  // delta form of C2(b)
  bool is_base() const { return c2.holds; }
  std::vector<const CheckItem*> items() const { return {&c2, &c2a, &c2b, &c2_prime, &c2b_prime}; }
};

BaseReport check_base(const CoverBase& base);

// (C3): every pair of distinct points is split by some cover in B.
bool check_hausdorff(const CoverBase& base);
CheckItem check_hausdorff_report(const CoverBase& base);

struct ShrinkingReport {
  CheckItem s1;
  std::vector<CheckItem> s2;  // one entry per cover of the base
  bool certified = false;     // S1 and all S2 entries hold
};

// Verifies (S1) and, for the supplied precise refinements (one per cover,
// aligned by index), that each binary cover {U_i, complement(V_i)} belongs
// to the structure generated by the base.
ShrinkingReport check_shrinking_hypotheses(const CoverBase& base, const std::vector<FiniteCover>& shrinks);

struct Cor32Witness {
  std::size_t point = 0;
  std::size_t neighborhood = 0;  // index into the region base
  FiniteCover cover;             // star({point}, cover) inside the neighborhood
};

struct Cor32Report {
  CheckItem intersection_closed;
  CheckItem topology_base;
  CheckItem covers_nonempty;
  CheckItem precise_refinements;  // every cover by base elements shrinks into complements
  CheckItem topology_match;       // uniform topology reproduces the declared one
  std::vector<Cor32Witness> witnesses;
  bool all_pass() const {
    return intersection_closed.holds && topology_base.holds && covers_nonempty.holds &&
           precise_refinements.holds && topology_match.holds;
  }
};

// Checks the hypotheses (and the topological conclusion) of the
// base-from-topology construction on a finite carrier with a declared
// topology, given as the list of open sets.  The empty region counts as
// an implicit member of the region base: disjoint intersections are fine,
// and the full carrier is always available as a complement.
Cor32Report check_cor32(const FiniteSetAlgebra& alg, const std::vector<FiniteRegion>& region_base,
                        const std::vector<FiniteRegion>& topology);

}  // namespace unicover
