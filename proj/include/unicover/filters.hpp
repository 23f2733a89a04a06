#pragma once

#include <cstddef>
#include <vector>

#include "unicover/axioms.hpp"
#include "unicover/finite.hpp"

namespace unicover {

/**
 * A filter on a finite carrier, given by a finite base of nonempty sets
 * whose pairwise (hence all finite) intersections are nonempty.  On a
 * finite carrier the generated filter is principal, so the upward closure
 * is represented by its minimal member: S belongs to the filter exactly
 * when S contains the minimal member.
 */
class Filter {
 public:
  // The filter generated by the given sets.  Throws "not a filter base"
  // when a generator or an intersection of generators is empty.
  static Filter from_base(const FiniteSetAlgebra& alg, const std::vector<FiniteRegion>& sets);

  // Principal filter of a single nonempty set.
  static Filter principal(const FiniteSetAlgebra& alg, const FiniteRegion& set);

  const FiniteSetAlgebra& alg() const { return alg_; }
  const FiniteRegion& minimal() const { return minimal_; }
  bool contains(const FiniteRegion& s) const { return minimal_.is_subset_of(s); }

  bool operator==(const Filter& o) const { return alg_ == o.alg_ && minimal_ == o.minimal_; }

 private:
  Filter(FiniteSetAlgebra alg, FiniteRegion minimal) : alg_(alg), minimal_(std::move(minimal)) {}
  FiniteSetAlgebra alg_;
  FiniteRegion minimal_;
};

// N_x: the filter generated by the balls B(x, C) over the base covers.
Filter neighborhood_filter(std::size_t x, const CoverBase& base);

// N_x <= F, read as inclusion of set systems: every member of N_x is a
// member of F.
bool converges_to(const Filter& f, std::size_t x, const CoverBase& base);

// F contains some member of each base cover.  Upward closure extends this
// to every cover of the generated structure, since a member U of a base
// cover refining C sits inside some member of C.
bool is_cauchy(const Filter& f, const CoverBase& base);

// The minimal Cauchy filter equivalent to F, generated by the stars of
// F's members over the base covers.  Requires a Cauchy input, and a base
// actually satisfying (C2) for the output to be Cauchy again.
Filter minimal_cauchy(const Filter& f, const CoverBase& base);

// Whether the intersection of the two filters (as set systems) is Cauchy.
// Both inputs must be Cauchy.
bool cauchy_equivalent(const Filter& f1, const Filter& f2, const CoverBase& base);

// All minimal Cauchy filters: the points of the completion.  Computed by
// minimalizing the (principal) ultrafilters and deduplicating.
std::vector<Filter> completion_points(const CoverBase& base);

// Every uniform cover of a finite carrier trivially has a finite subcover.
inline bool totally_bounded(const CoverBase&) { return true; }

// The truncated completion demo: carrier Z in [0, p^N) with the coset
// partitions mod p^k for k = 0..N.  Its completion has exactly p^N
// points, one per residue mod p^N; the untruncated statement is the
// N -> infinity limit of this counting law.
CoverBase residue_tower_base(long p, long depth);

// The paper-literal filter order: every member of F is contained in some
// member of G.  On upward-closed families over a finite carrier this is
// vacuously true (X itself absorbs every member), which is why
// converges_to uses inclusion instead.  Kept for the record.
bool filter_refines_literal(const Filter& f, const Filter& g);

// F is a subsystem of G: every member of F is a member of G.
inline bool filter_subset(const Filter& f, const Filter& g) { return g.minimal().is_subset_of(f.minimal()); }

}  // namespace unicover
