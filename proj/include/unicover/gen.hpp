#pragma once

// Deterministic data generators and sampling oracles for the randomized
// property suites: a seed-stable PRNG, finite covers and bases, metric
// spaces, disc points, factored polynomials, and open Laurent covers.

#include <cstdint>
#include <optional>
#include <vector>

#include "unicover/abs_value.hpp"
#include "unicover/axioms.hpp"
#include "unicover/cover.hpp"
#include "unicover/disc/laurent.hpp"
#include "unicover/disc/poly.hpp"
#include "unicover/finite.hpp"
#include "unicover/rat.hpp"

namespace unicover::gen {

using unicover::AbsValue;
using unicover::CoverBase;
using unicover::FiniteCover;
using unicover::FiniteMetric;
using unicover::FiniteRegion;
using unicover::FiniteSetAlgebra;
using unicover::Rat;

// splitmix64: tiny, fully deterministic across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

inline Rat random_nonzero_rat(Rng& rng, long num_bound = 30, long den_bound = 12) {
  long num = 0;
  while (num == 0) num = rng.range(-num_bound, num_bound);
  return unicover::make_rat(num, rng.range(1, den_bound));
}

inline long random_prime(Rng& rng) {
  static const long primes[] = {2, 3, 5, 7};
  return primes[rng.below(4)];
}

// --- finite covers ------------------------------------------------------

inline FiniteRegion random_nonempty_region(Rng& rng, const FiniteSetAlgebra& alg) {
  FiniteRegion r(alg.size());
  while (r.none())
    for (std::size_t i = 0; i < alg.size(); ++i)
      if (rng.chance(1, 2)) r.set(i);
  return r;
}

inline FiniteCover random_cover(Rng& rng, const FiniteSetAlgebra& alg, std::size_t max_members = 4) {
  std::vector<FiniteRegion> regions;
  const std::size_t k = 1 + rng.below(max_members);
  for (std::size_t i = 0; i < k; ++i) regions.push_back(random_nonempty_region(rng, alg));
  FiniteRegion missing = alg.carrier_region();
  for (const auto& r : regions) missing -= r;
  if (missing.any()) {
    if (rng.chance(1, 2))
      regions.push_back(missing);
    else
      regions[rng.below(regions.size())] |= missing;
  }
  return FiniteCover(alg, std::move(regions));
}

// A pair (D, shrink) with shrink a precise refinement of D and both
// covers; regenerates until normalization keeps the indexing aligned.
inline std::pair<FiniteCover, FiniteCover> random_precise_pair(Rng& rng, const FiniteSetAlgebra& alg) {
  for (;;) {
    FiniteCover shrink = random_cover(rng, alg);
    std::vector<FiniteRegion> grown;
    for (const auto& v : shrink.regions()) {
      FiniteRegion u = v;
      for (std::size_t i = 0; i < alg.size(); ++i)
        if (rng.chance(1, 4)) u.set(i);
      grown.push_back(u);
    }
    FiniteCover d(alg, std::move(grown));
    if (d.size() == shrink.size() && precise_refines(shrink, d)) return {std::move(d), std::move(shrink)};
  }
}

// Random rational line metric: exact, nondegenerate, varied scales.
inline FiniteMetric random_metric(Rng& rng, std::size_t n) {
  std::vector<Rat> xs;
  while (xs.size() < n) {
    Rat x = unicover::make_rat(rng.range(-40, 40), rng.range(1, 6));
    bool dup = false;
    for (const auto& seen : xs) dup = dup || seen == x;
    if (!dup) xs.push_back(x);
  }
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = abs(xs[i] - xs[j]);
  return FiniteMetric(std::move(dist));
}

// --- cover bases --------------------------------------------------------

// A refinement chain of partitions, optionally reaching singletons.  Such
// chains satisfy (C2) outright: a partition star-refines anything it
// refines.
inline std::vector<FiniteCover> partition_chain(Rng& rng, const FiniteSetAlgebra& alg, bool to_singletons) {
  std::vector<std::vector<FiniteRegion>> chain;
  std::vector<FiniteRegion> current = {alg.carrier_region()};
  chain.push_back(current);
  for (;;) {
    std::vector<FiniteRegion> next;
    bool split_any = false;
    for (const auto& block : current) {
      auto pts = alg.points_of(block);
      if (pts.size() >= 2 && (to_singletons || rng.chance(2, 3))) {
        FiniteRegion a(alg.size()), b(alg.size());
        for (std::size_t t = 0; t < pts.size(); ++t) {
          if (t == 0 || (t + 1 < pts.size() && rng.chance(1, 2)))
            a.set(pts[t]);
          else
            b.set(pts[t]);
        }
        if (b.none()) {
          next.push_back(block);
          continue;
        }
        next.push_back(a);
        next.push_back(b);
        split_any = true;
      } else {
        next.push_back(block);
      }
    }
    current = next;
    if (!split_any) break;
    chain.push_back(current);
  }
  std::vector<FiniteCover> covers;
  for (auto& regions : chain) covers.emplace_back(alg, regions);
  return covers;
}

// Mixed base generator: partition chains pass (C2) by construction,
// singleton-seeded bases pass it through the singleton cover, and raw
// random bases exercise the failure paths.
inline CoverBase random_base(Rng& rng, const FiniteSetAlgebra& alg) {
  switch (rng.below(3)) {
    case 0:
      return CoverBase(alg, partition_chain(rng, alg, rng.chance(1, 2)));
    case 1: {
      std::vector<FiniteCover> covers;
      std::vector<FiniteRegion> singletons;
      for (std::size_t i = 0; i < alg.size(); ++i) singletons.push_back(alg.point_region(i));
      covers.emplace_back(alg, singletons);
      const std::size_t extra = rng.below(3);
      for (std::size_t i = 0; i < extra; ++i) covers.push_back(random_cover(rng, alg));
      return CoverBase(alg, std::move(covers));
    }
    default: {
      std::vector<FiniteCover> covers;
      const std::size_t k = 1 + rng.below(3);
      for (std::size_t i = 0; i < k; ++i) covers.push_back(random_cover(rng, alg));
      return CoverBase(alg, std::move(covers));
    }
  }
}

// All normalized covers of a small carrier (every set of nonempty subsets
// whose union is the carrier).
inline std::vector<FiniteCover> all_covers(const FiniteSetAlgebra& alg) {
  const std::size_t n = alg.size();
  if (n > 4) throw std::invalid_argument("all_covers: carrier too large");
  const std::size_t subsets = (std::size_t{1} << n) - 1;  // nonempty subsets
  std::vector<FiniteRegion> regions;
  for (std::size_t mask = 1; mask <= subsets; ++mask) {
    FiniteRegion r(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) r.set(i);
    regions.push_back(r);
  }
  std::vector<FiniteCover> covers;
  const std::size_t families = std::size_t{1} << regions.size();
  for (std::size_t pick = 1; pick < families; ++pick) {
    FiniteRegion covered(n);
    std::vector<FiniteRegion> members;
    for (std::size_t i = 0; i < regions.size(); ++i)
      if (pick & (std::size_t{1} << i)) {
        covered |= regions[i];
        members.push_back(regions[i]);
      }
    if (covered == alg.carrier_region()) covers.emplace_back(alg, std::move(members));
  }
  return covers;
}

// --- disc data ----------------------------------------------------------

namespace disc = unicover::disc;

// Rational point of the closed unit disc: denominator coprime to p.
inline Rat random_disc_rat(Rng& rng, long p) {
  long den = 1;
  do {
    den = rng.range(1, 12);
  } while (den % p == 0);
  return unicover::make_rat(rng.range(-24, 24), den);
}

// Exponent in [0, hi] with denominator at most 4.
inline Rat random_radius_exponent(Rng& rng, long hi = 5) {
  long den = rng.range(1, 4);
  return unicover::make_rat(rng.range(0, hi * den), den);
}

inline disc::BerkPoint random_point(Rng& rng, long p) {
  Rat center = random_disc_rat(rng, p);
  if (rng.chance(1, 3)) return disc::BerkPoint::type1(p, center);
  return disc::BerkPoint::type2(disc::Disk(center, AbsValue(p, random_radius_exponent(rng))));
}

inline disc::FactoredPoly random_poly(Rng& rng, long p, std::size_t max_roots = 3) {
  Rat lead = random_nonzero_rat(rng, 9, 6);
  disc::FactoredPoly::RootList roots;
  const std::size_t k = rng.below(max_roots + 1);
  for (std::size_t i = 0; i < k; ++i) {
    Rat root = rng.chance(5, 6) ? random_disc_rat(rng, p)
                                : unicover::make_rat(rng.range(1, 9), 1) / p;  // outside the disc
    roots.emplace_back(root, rng.chance(4, 5) ? 1 : 2);
  }
  return disc::FactoredPoly(lead, std::move(roots));
}

// --- random open Laurent covers ------------------------------------------

// Overlapping annuli around a common center, in exponent space:
//   { |T-c| > p^-h1 }, { p^-g1 < |T-c| < p^-h2 }, ..., { |T-c| < p^-gk }.
inline std::vector<disc::LaurentDomain> annulus_cover(Rng& rng, long p) {
  Rat c = random_disc_rat(rng, p);
  const int bands = static_cast<int>(1 + rng.below(2));  // 1 or 2 middle bands
  // walls 0 < g1 < h1 < g2 < h2 < ... with overlap g_i < h_i
  std::vector<Rat> walls;
  Rat q(0);
  for (int i = 0; i < 2 * bands; ++i) {
    long den = rng.range(1, 4);
    q += unicover::make_rat(rng.range(1, 2 * den), den);
    walls.push_back(q);
  }
  disc::FactoredPoly t = disc::FactoredPoly::linear(c);
  std::vector<disc::LaurentDomain> domains;
  // lowest piece: exponents below h1, i.e. |T-c| > p^-h1
  domains.emplace_back(p, std::vector<disc::Constraint>{
                              disc::Constraint(t, AbsValue(p, walls[1]), disc::ConstraintOp::GT)});
  for (int b = 1; b < bands; ++b) {
    std::vector<disc::Constraint> cs;
    cs.emplace_back(t, AbsValue(p, walls[2 * b - 2]), disc::ConstraintOp::LT);
    cs.emplace_back(t, AbsValue(p, walls[2 * b + 1]), disc::ConstraintOp::GT);
    domains.emplace_back(p, std::move(cs));
  }
  // top piece: exponents above g_k, i.e. |T-c| < p^-g_k
  domains.emplace_back(p, std::vector<disc::Constraint>{disc::Constraint(
                              t, AbsValue(p, walls[2 * bands - 2]), disc::ConstraintOp::LT)});
  return domains;
}

// Residue disks plus a multi-root escape domain:
//   { |T-j| < 1 : j = 0..p-1 },  { |prod_j (T-j)| > p^-1 }.
inline std::vector<disc::LaurentDomain> residue_cover(Rng& rng, long p) {
  std::vector<disc::LaurentDomain> domains;
  disc::FactoredPoly::RootList roots;
  for (long j = 0; j < p; ++j) {
    disc::FactoredPoly t = disc::FactoredPoly::linear(Rat(j));
    domains.emplace_back(p, std::vector<disc::Constraint>{
                                disc::Constraint(t, AbsValue::one(p), disc::ConstraintOp::LT)});
    roots.emplace_back(Rat(j), 1);
  }
  disc::FactoredPoly product(Rat(1), std::move(roots));
  domains.emplace_back(p, std::vector<disc::Constraint>{
                              disc::Constraint(product, AbsValue(p, Rat(1)), disc::ConstraintOp::GT)});
  // jitter: optionally multiply the escape polynomial by a far-away factor,
  // compensating the bound so the domain is unchanged on the disc
  if (rng.chance(1, 2)) {
    long k = 1;
    do {
      k = rng.range(1, 6);
    } while (k % p == 0);
    Rat far = unicover::make_rat(k, 1) / p;  // |far| = p > 1
    long v = unicover::padic_valuation(far, p);
    disc::FactoredPoly scaled = domains.back().constraints()[0].poly * disc::FactoredPoly::linear(far);
    AbsValue bound(p, Rat(1) + Rat(v));
    domains.back() = disc::LaurentDomain(p, {disc::Constraint(scaled, bound, disc::ConstraintOp::GT)});
  }
  return domains;
}

// Two-center pattern: { |T-c1| > p^-m } with { |T-c2| < p^-g }, g < m and
// |c1-c2| <= p^-m, plus an optional vacuous constraint.
inline std::vector<disc::LaurentDomain> two_center_cover(Rng& rng, long p) {
  Rat c1 = random_disc_rat(rng, p);
  long dm = rng.range(1, 3);
  Rat m = unicover::make_rat(rng.range(1, 3 * dm), dm);
  Rat g = m - unicover::make_rat(1, rng.range(1, 4));  // g < m
  // c2 within p^-m of c1: add a multiple of p^ceil(m)
  long shift = static_cast<long>(mpz_class(m.get_num() / m.get_den()).get_si()) + 1;
  Rat c2 = c1;
  if (rng.chance(1, 2)) {
    Rat step(1);
    for (long i = 0; i < shift; ++i) step *= p;  // |p^shift|_p <= p^-m
    c2 = c1 + Rat(rng.range(1, 3)) * step;
  }
  std::vector<disc::LaurentDomain> domains;
  domains.emplace_back(p, std::vector<disc::Constraint>{disc::Constraint(
                              disc::FactoredPoly::linear(c1), AbsValue(p, m), disc::ConstraintOp::GT)});
  std::vector<disc::Constraint> inner;
  inner.emplace_back(disc::FactoredPoly::linear(c2), AbsValue(p, g), disc::ConstraintOp::LT);
  if (rng.chance(1, 3)) {
    // vacuous companion: |f| < p * |f|_Gauss holds everywhere
    disc::FactoredPoly f = random_poly(rng, p, 2);
    AbsValue gauss = disc::seminorm(f, disc::BerkPoint::gauss(p));
    if (!gauss.is_zero()) inner.emplace_back(f, AbsValue(p, gauss.exponent() - 1), disc::ConstraintOp::LT);
  }
  domains.emplace_back(p, std::move(inner));
  return domains;
}

inline std::vector<disc::LaurentDomain> random_open_cover(Rng& rng, long p) {
  switch (rng.below(3)) {
    case 0: return annulus_cover(rng, p);
    case 1: return residue_cover(rng, p);
    default: return two_center_cover(rng, p);
  }
}

// --- sampling oracles -----------------------------------------------------

// True when some domain certainly contains the point.
inline bool covered_by_some(const std::vector<disc::LaurentDomain>& domains, const disc::BerkPoint& x) {
  for (const auto& d : domains)
    if (disc::member(d, x) == disc::Ternary::True) return true;
  return false;
}

}  // namespace unicover::gen
