#include "unicover/filters.hpp"

#include <stdexcept>

namespace unicover {

Filter Filter::from_base(const FiniteSetAlgebra& alg, const std::vector<FiniteRegion>& sets) {
  if (sets.empty()) throw std::invalid_argument("not a filter base: no generators");
  FiniteRegion minimal = alg.carrier_region();
  for (const auto& s : sets) {
    if (s.none()) throw std::invalid_argument("not a filter base: empty generator");
    minimal &= s;
  }
  // Pairwise closure bottoms out at the total intersection, so emptiness
  // there is exactly the failure of the finite-intersection property.
  if (minimal.none()) throw std::invalid_argument("not a filter base: empty intersection");
  return Filter(alg, std::move(minimal));
}

Filter Filter::principal(const FiniteSetAlgebra& alg, const FiniteRegion& set) {
  return from_base(alg, {set});
}

Filter neighborhood_filter(std::size_t x, const CoverBase& base) {
  const auto& alg = base.alg();
  FiniteRegion minimal = alg.carrier_region();
  for (const auto& c : base.covers()) minimal &= star(alg.point_region(x), c);
  return Filter::principal(alg, minimal);
}

bool converges_to(const Filter& f, std::size_t x, const CoverBase& base) {
  return filter_subset(neighborhood_filter(x, base), f);
}

bool is_cauchy(const Filter& f, const CoverBase& base) {
  for (const auto& c : base.covers()) {
    bool has_member = false;
    for (const auto& u : c.regions())
      if (f.contains(u)) {
        has_member = true;
        break;
      }
    if (!has_member) return false;
  }
  return true;
}

Filter minimal_cauchy(const Filter& f, const CoverBase& base) {
  if (!is_cauchy(f, base)) throw std::invalid_argument("minimal_cauchy: filter is not Cauchy");
  const auto& alg = base.alg();
  FiniteRegion minimal = alg.carrier_region();
  for (const auto& c : base.covers()) minimal &= star(f.minimal(), c);
  return Filter::principal(alg, minimal);
}

bool cauchy_equivalent(const Filter& f1, const Filter& f2, const CoverBase& base) {
  if (!is_cauchy(f1, base) || !is_cauchy(f2, base))
    throw std::invalid_argument("cauchy_equivalent: both filters must be Cauchy");
  Filter meet = Filter::principal(base.alg(), f1.minimal() | f2.minimal());
  return is_cauchy(meet, base);
}

std::vector<Filter> completion_points(const CoverBase& base) {
  const auto& alg = base.alg();
  std::vector<Filter> points;
  for (std::size_t x = 0; x < alg.point_count(); ++x) {
    Filter m = minimal_cauchy(Filter::principal(alg, alg.point_region(x)), base);
    bool seen = false;
    for (const auto& q : points)
      if (q == m) {
        seen = true;
        break;
      }
    if (!seen) points.push_back(std::move(m));
  }
  return points;
}

CoverBase residue_tower_base(long p, long depth) {
  if (!is_prime(p)) throw std::invalid_argument("residue_tower_base: prime required");
  if (depth < 0) throw std::invalid_argument("residue_tower_base: negative depth");
  std::size_t n = 1;
  for (long k = 0; k < depth; ++k) n *= static_cast<std::size_t>(p);
  FiniteSetAlgebra alg(n);
  std::vector<FiniteCover> covers;
  std::size_t modulus = 1;
  for (long k = 0; k <= depth; ++k) {
    std::vector<FiniteRegion> blocks(modulus, FiniteRegion(n));
    for (std::size_t x = 0; x < n; ++x) blocks[x % modulus].set(x);
    covers.emplace_back(alg, std::move(blocks));
    modulus *= static_cast<std::size_t>(p);
  }
  return CoverBase(alg, std::move(covers));
}

bool filter_refines_literal(const Filter& f, const Filter& g) {
  // Witness for an arbitrary member U of f: U | g.minimal() belongs to g
  // and contains U.  The relation therefore never distinguishes filters
  // on a finite carrier, which is why converges_to uses filter_subset.
  FiniteRegion witness = f.minimal() | g.minimal();
  return g.contains(witness) && f.minimal().is_subset_of(witness);
}

}  // namespace unicover
