#include "unicover/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "unicover/entourages.hpp"
#include "unicover/filters.hpp"
#include "unicover/gen.hpp"

namespace unicover {

namespace {

using gen::Rng;
namespace disc = unicover::disc;

int scaled(int full, double scale) { return std::max(1, static_cast<int>(full * scale)); }

struct Failure {
  bool failed = false;
  std::string what;
  void record(const std::string& message) {
    if (!failed) what = message;
    failed = true;
  }
};

// 1. The star-delta chain: every cover refines through
//    delta < star < delta-of-delta.
CriterionResult chain_criterion(Rng& rng, double scale) {
  CriterionResult r{1, "star-delta chain on random covers", false, "", 0, 10.0};
  const int instances = scaled(1000, scale);
  Failure fail;
  for (int i = 0; i < instances && !fail.failed; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(8));
    FiniteCover c = gen::random_cover(rng, alg);
    auto cs = star_cover(c);
    auto cd = delta_cover(c);
    if (!refines(cd, cs)) fail.record("delta cover fails to refine the star cover");
    if (!refines(cs, delta_cover(cd))) fail.record("star cover fails to refine the iterated delta");
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << instances << " covers";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 2. The shrinking construction delta-refines, checked ball by ball.
CriterionResult shrinking_lemma_criterion(Rng& rng, double scale) {
  CriterionResult r{2, "shrinking construction delta-refines", false, "", 0, 10.0};
  const int instances = scaled(500, scale);
  Failure fail;
  for (int i = 0; i < instances && !fail.failed; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(8));
    auto [d, shrink] = gen::random_precise_pair(rng, alg);
    FiniteCover refined = shrink_to_delta_refinement(d, shrink);
    for (std::size_t x = 0; x < alg.size(); ++x) {
      FiniteRegion ball = star(alg.point_region(x), refined);
      bool inside = false;
      for (const auto& u : d.regions()) inside = inside || alg.is_subset(ball, u);
      if (!inside) fail.record("a ball escapes every member of the shrunk cover");
    }
    if (!delta_refines(refined, d)) fail.record("delta refinement fails");
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << instances << " (cover, shrink) pairs";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 3. Metric facts: thirds star-refine, halves delta-refine.
CriterionResult metric_criterion(Rng& rng, double scale) {
  CriterionResult r{3, "metric ball covers refine as thirds and halves", false, "", 0, 10.0};
  const int instances = scaled(200, scale);
  Failure fail;
  for (int i = 0; i < instances && !fail.failed; ++i) {
    FiniteMetric metric = gen::random_metric(rng, 2 + rng.below(7));
    for (int j = 0; j < 3 && !fail.failed; ++j) {
      Rat eps = make_rat(rng.range(1, 40), rng.range(1, 5));
      FiniteCover coarse = metric.ball_cover(eps);
      if (!star_refines(metric.ball_cover(eps / 3), coarse))
        fail.record("eps/3 balls fail to star-refine eps balls");
      if (!delta_refines(metric.ball_cover(eps / 2), coarse))
        fail.record("eps/2 balls fail to delta-refine eps balls");
    }
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << instances << " metric spaces, 3 radii each";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

CoverBase random_valid_base(Rng& rng, const FiniteSetAlgebra& alg) {
  if (rng.chance(1, 2)) return CoverBase(alg, gen::partition_chain(rng, alg, rng.chance(1, 2)));
  std::vector<FiniteRegion> singles;
  for (std::size_t i = 0; i < alg.size(); ++i) singles.push_back(alg.point_region(i));
  std::vector<FiniteCover> covers = {FiniteCover(alg, singles)};
  const std::size_t extra = rng.below(3);
  for (std::size_t i = 0; i < extra; ++i) covers.push_back(gen::random_cover(rng, alg));
  return CoverBase(alg, std::move(covers));
}

// 4. Entourage round trips against exhaustive cover enumeration.
CriterionResult entourage_criterion(Rng& rng, double scale) {
  CriterionResult r{4, "entourage round trips on exhaustive covers", false, "", 0, 30.0};
  const int instances = scaled(50, scale);
  Failure fail;
  int tested = 0;
  while (tested < instances && !fail.failed) {
    FiniteSetAlgebra alg(1 + rng.below(4));
    CoverBase base = random_valid_base(rng, alg);
    if (!check_base(base).c2.holds) continue;
    ++tested;
    auto entourages = covers_to_entourages(base);
    if (!check_entourage_axioms(entourages).all_hold())
      fail.record("cover-derived entourages fail the axioms");
    auto pred = entourages_to_covers(entourages);
    for (const auto& cover : gen::all_covers(alg))
      if (pred(cover) != is_uniform_cover(cover, base)) {
        fail.record("entourage uniformity disagrees with refinement into the base");
        break;
      }
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << tested << " bases, all covers on their carriers";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 5. Finite compact uniqueness: bases passing C2 and C3 generate the
//    singleton cover.
CriterionResult uniqueness_criterion(Rng& rng, double scale) {
  CriterionResult r{5, "Hausdorff bases generate the singleton cover", false, "", 0, 10.0};
  const int instances = scaled(200, scale);
  Failure fail;
  int passing = 0;
  for (int i = 0; i < instances && !fail.failed; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(6));
    CoverBase base = gen::random_base(rng, alg);
    if (!check_base(base).c2.holds || !check_hausdorff(base)) continue;
    ++passing;
    std::vector<FiniteRegion> singles;
    for (std::size_t x = 0; x < alg.size(); ++x) singles.push_back(alg.point_region(x));
    if (!is_uniform_cover(FiniteCover(alg, singles), base))
      fail.record("a separated base misses the singleton cover");
  }
  if (passing == 0) fail.record("no generated base passed C2 and C3");
  r.pass = !fail.failed;
  std::ostringstream os;
  os << passing << " of " << instances << " bases passed C2+C3";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 6. The residue tower counting law.
CriterionResult completion_criterion(Rng&, double) {
  CriterionResult r{6, "residue tower completions count p^N points", false, "", 0, 30.0};
  const std::pair<long, long> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
  Failure fail;
  for (auto [p, n] : cases) {
    std::size_t expect = 1;
    for (long k = 0; k < n; ++k) expect *= static_cast<std::size_t>(p);
    if (completion_points(residue_tower_base(p, n)).size() != expect) {
      std::ostringstream os;
      os << "completion of the (" << p << ", " << n << ") tower misses " << expect << " points";
      fail.record(os.str());
    }
  }
  r.pass = !fail.failed;
  r.detail = fail.failed ? fail.what : "towers (2,1) (2,2) (2,3) (3,1) (3,2) (5,1)";
  return r;
}

// 7. Seminorm axioms: multiplicativity exactly, subadditivity exactly on
//    refactorable sums and through rational probes otherwise.
CriterionResult seminorm_criterion(Rng& rng, double scale) {
  CriterionResult r{7, "seminorm axioms on random factored pairs", false, "", 0, 60.0};
  const int instances = scaled(1000, scale);
  const int probes = 500;
  Failure fail;
  int exact_route = 0, sampled_route = 0;
  static const long primes[] = {2, 3, 5};
  for (int i = 0; i < instances && !fail.failed; ++i) {
    long p = primes[rng.below(3)];
    disc::FactoredPoly f = gen::random_poly(rng, p, 2);
    disc::FactoredPoly g = rng.chance(1, 3)
                               ? disc::FactoredPoly(gen::random_nonzero_rat(rng, 9, 6), f.roots())
                               : gen::random_poly(rng, p, 2);
    for (int t = 0; t < 3; ++t) {
      disc::BerkPoint x = gen::random_point(rng, p);
      if (!(seminorm(f * g, x) == seminorm(f, x) * seminorm(g, x)))
        fail.record("multiplicativity fails");
      if (!(seminorm(disc::FactoredPoly::constant(Rat(1)), x) == AbsValue::one(p)))
        fail.record("the unit seminorm is not 1");
      if (!seminorm(disc::FactoredPoly::zero(), x).is_zero()) fail.record("the zero seminorm is not 0");
    }
    if (auto sum = disc::refactor(disc::sum_coefficients(f, g))) {
      ++exact_route;
      for (int t = 0; t < 4; ++t) {
        disc::BerkPoint x = gen::random_point(rng, p);
        if (!(seminorm(*sum, x) <= std::max(seminorm(f, x), seminorm(g, x))))
          fail.record("exact subadditivity fails");
      }
    } else {
      ++sampled_route;
      for (int t = 0; t < probes && !fail.failed; ++t) {
        Rat a = gen::random_disc_rat(rng, p);
        Rat fa = f.eval(a), ga = g.eval(a);
        Rat sum_value = fa + ga;
        if (sum_value == 0) continue;
        AbsValue vf = fa == 0 ? AbsValue::zero(p) : padic_abs(fa, p);
        AbsValue vg = ga == 0 ? AbsValue::zero(p) : padic_abs(ga, p);
        if (!(padic_abs(sum_value, p) <= std::max(vf, vg))) fail.record("sampled subadditivity fails");
      }
    }
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << instances << " pairs (" << exact_route << " refactored, " << sampled_route << " sampled)";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 8. End-to-end shrinking of random open Laurent covers, with the
//    coverage decision sampled at a thousand points per instance.
CriterionResult shrink_criterion(Rng& rng, double scale) {
  CriterionResult r{8, "open Laurent covers shrink to closed precise refinements", false, "", 0, 120.0};
  const int instances = scaled(200, scale);
  const int probes = 1000;
  Failure fail;
  for (int i = 0; i < instances && !fail.failed; ++i) {
    long p = rng.chance(1, 2) ? 2 : 3;
    auto domains = gen::random_open_cover(rng, p);
    if (!covers_disc(domains)) {
      fail.record("generator produced a non-cover");
      break;
    }
    auto out = disc::shrink_cover(domains);
    if (out.size() != domains.size()) fail.record("length changed");
    for (std::size_t k = 0; k < out.size() && !fail.failed; ++k) {
      if (!out[k].is_closed()) fail.record("output not closed-form");
      if (!region_subset(to_region(out[k]), to_region(domains[k])))
        fail.record("output is not a precise refinement");
    }
    if (!covers_disc(out)) fail.record("closed output does not cover");
    for (int t = 0; t < probes && !fail.failed; ++t) {
      disc::BerkPoint x = gen::random_point(rng, p);
      if (!gen::covered_by_some(domains, x)) fail.record("input cover misses a sampled point");
      if (!gen::covered_by_some(out, x)) fail.record("closed output misses a sampled point");
    }
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << instances << " covers, " << probes << " probes each";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 9. Maximum modulus on random closed regions and root-free polynomials.
CriterionResult maxmod_criterion(Rng& rng, double scale) {
  CriterionResult r{9, "maximum modulus brackets samples in the value group", false, "", 0, 60.0};
  const int instances = scaled(200, scale);
  Failure fail;
  int built = 0;
  while (built < instances && !fail.failed) {
    long p = rng.chance(1, 2) ? 2 : 3;
    std::vector<disc::Constraint> cs;
    const std::size_t k = 1 + rng.below(2);
    for (std::size_t t = 0; t < k; ++t) {
      disc::FactoredPoly f = gen::random_poly(rng, p, 2);
      while (f.degree() == 0) f = gen::random_poly(rng, p, 2);
      cs.emplace_back(f, AbsValue(p, make_rat(rng.range(-2, 8), rng.range(1, 4))),
                      rng.chance(1, 2) ? disc::ConstraintOp::LE : disc::ConstraintOp::GE);
    }
    disc::RegionUnion region = to_region(disc::LaurentDomain(p, cs));
    if (region.is_empty()) continue;

    // strip the polynomial of any roots inside the region
    disc::FactoredPoly raw = gen::random_poly(rng, p);
    disc::FactoredPoly::RootList outside;
    for (const auto& [root, mult] : raw.roots()) {
      bool inside = disc::abs_or_zero(root, p) <= AbsValue::one(p) &&
                    region.contains(disc::BerkPoint::type1(p, root));
      if (!inside) outside.emplace_back(root, mult);
    }
    disc::FactoredPoly f(raw.lead(), outside);
    ++built;

    auto mm = disc::maximum_modulus(f, region);
    if (!in_value_group(mm.min) || !in_value_group(mm.max))
      fail.record("extreme values escape the value group");
    if (!(seminorm(f, mm.argmin) == mm.min) || !(seminorm(f, mm.argmax) == mm.max))
      fail.record("witness points do not attain the extremes");
    for (int t = 0; t < 120 && !fail.failed; ++t) {
      disc::BerkPoint x = gen::random_point(rng, p);
      if (!region.contains(x)) continue;
      AbsValue v = seminorm(f, x);
      if (v < mm.min || mm.max < v) fail.record("a sampled value escapes the bracket");
    }
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << built << " regions with root-free polynomials";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

// 10. Hausdorff separation of random distinct disc points.
CriterionResult separation_criterion(Rng& rng, double scale) {
  CriterionResult r{10, "open Laurent pairs separate distinct points", false, "", 0, 10.0};
  const int instances = scaled(500, scale);
  Failure fail;
  int tested = 0;
  while (tested < instances && !fail.failed) {
    long p = gen::random_prime(rng);
    disc::BerkPoint x = gen::random_point(rng, p);
    disc::BerkPoint y = gen::random_point(rng, p);
    if (disc::compare_points(x, y) == disc::PartialOrder::Equal) continue;
    ++tested;
    auto [ux, uy] = disc::separating_pair(x, y);
    if (!(disc::member(ux, x) == disc::Ternary::True) || !(disc::member(uy, y) == disc::Ternary::True) ||
        !(disc::member(ux, y) == disc::Ternary::False) || !(disc::member(uy, x) == disc::Ternary::False))
      fail.record("a constructed pair fails to separate");
  }
  r.pass = !fail.failed;
  std::ostringstream os;
  os << tested << " point pairs";
  r.detail = fail.failed ? fail.what : os.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, double scale) {
  using Runner = CriterionResult (*)(Rng&, double);
  static const Runner runners[] = {
      chain_criterion,     shrinking_lemma_criterion, metric_criterion, entourage_criterion,
      uniqueness_criterion, completion_criterion,      seminorm_criterion, shrink_criterion,
      maxmod_criterion,    separation_criterion,
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < std::size(runners); ++i) {
    Rng rng(seed + i * 0x9e3779b9ull);
    auto start = std::chrono::steady_clock::now();
    CriterionResult result = runners[i](rng, scale);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.pass && result.seconds > result.budget_seconds) {
      result.pass = false;
      result.detail += " (over time budget)";
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace unicover
