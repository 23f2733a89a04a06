#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "unicover/filters.hpp"

using namespace unicover;
using testsup::Rng;

namespace {

FiniteCover make_cover(const FiniteSetAlgebra& alg, std::vector<std::vector<std::size_t>> sets) {
  std::vector<FiniteRegion> regions;
  for (auto& s : sets) regions.push_back(alg.region_of(s));
  return FiniteCover(alg, std::move(regions));
}

FiniteCover singleton_cover(const FiniteSetAlgebra& alg) {
  std::vector<FiniteRegion> regions;
  for (std::size_t i = 0; i < alg.size(); ++i) regions.push_back(alg.point_region(i));
  return FiniteCover(alg, std::move(regions));
}

// Valid bases only: partition chains and singleton-seeded families, where
// (C2) holds by construction.
CoverBase random_valid_base(Rng& rng, const FiniteSetAlgebra& alg) {
  if (rng.chance(1, 2)) return CoverBase(alg, testsup::partition_chain(rng, alg, rng.chance(1, 2)));
  std::vector<FiniteCover> covers = {singleton_cover(alg)};
  const std::size_t extra = rng.below(3);
  for (std::size_t i = 0; i < extra; ++i) covers.push_back(testsup::random_cover(rng, alg));
  return CoverBase(alg, std::move(covers));
}

}  // namespace

TEST_CASE("filter_from_base on the stated examples") {
  FiniteSetAlgebra alg(3);
  auto f = Filter::from_base(alg, {alg.region_of({0, 1}), alg.region_of({0, 2})});
  CHECK(f.minimal() == alg.region_of({0}));
  CHECK(f.contains(alg.region_of({0, 1})));
  CHECK_FALSE(f.contains(alg.region_of({1, 2})));
  CHECK_THROWS_AS(Filter::from_base(alg, {alg.region_of({0}), alg.region_of({1})}), std::invalid_argument);
  CHECK_THROWS_AS(Filter::from_base(alg, {alg.empty_region()}), std::invalid_argument);
  CHECK(Filter::from_base(alg, {alg.carrier_region()}).minimal() == alg.carrier_region());
  // pairwise-fine but globally empty generators are still rejected
  CHECK_THROWS_AS(
      Filter::from_base(alg, {alg.region_of({0, 1}), alg.region_of({0, 2}), alg.region_of({1, 2})}),
      std::invalid_argument);
}

TEST_CASE("neighborhood filters on the stated examples") {
  FiniteSetAlgebra two(2);
  CoverBase singles(two, {singleton_cover(two)});
  CHECK(neighborhood_filter(0, singles).minimal() == two.region_of({0}));
  CoverBase trivial(two, {make_cover(two, {{0, 1}})});
  CHECK(neighborhood_filter(0, trivial).minimal() == two.carrier_region());

  // Z in [0,8) with cosets mod 1, 2, 4: the neighborhood of 1 is {1,5}
  auto tower = residue_tower_base(2, 3);
  std::vector<FiniteCover> covers(tower.covers().begin(), tower.covers().end() - 1);
  CoverBase depth2(tower.alg(), covers);
  CHECK(neighborhood_filter(1, depth2).minimal() == tower.alg().region_of({1, 5}));
}

TEST_CASE("convergence on the stated examples") {
  FiniteSetAlgebra two(2);
  CoverBase singles(two, {singleton_cover(two)});
  auto n0 = neighborhood_filter(0, singles);
  CHECK(converges_to(n0, 0, singles));
  CHECK_FALSE(converges_to(Filter::principal(two, two.carrier_region()), 0, singles));
  CHECK(converges_to(Filter::principal(two, two.region_of({0})), 0, singles));
}

TEST_CASE("Cauchy filters on the stated examples") {
  FiniteSetAlgebra two(2);
  CoverBase singles(two, {singleton_cover(two)});
  CHECK_FALSE(is_cauchy(Filter::principal(two, two.carrier_region()), singles));

  Rng rng(301);
  for (int i = 0; i < 40; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(6));
    auto base = random_valid_base(rng, alg);
    for (std::size_t x = 0; x < alg.size(); ++x) CHECK(is_cauchy(neighborhood_filter(x, base), base));
  }

  auto tower = residue_tower_base(2, 3);
  std::vector<FiniteCover> covers(tower.covers().begin(), tower.covers().end() - 1);
  CoverBase depth2(tower.alg(), covers);
  CHECK(is_cauchy(Filter::principal(tower.alg(), tower.alg().region_of({1, 5})), depth2));
}

TEST_CASE("minimal Cauchy filters on the stated examples") {
  FiniteSetAlgebra two(2);
  CoverBase singles(two, {singleton_cover(two)});
  auto ultra = Filter::principal(two, two.region_of({0}));
  CHECK(minimal_cauchy(ultra, singles) == neighborhood_filter(0, singles));
  CHECK_THROWS_AS(minimal_cauchy(Filter::principal(two, two.carrier_region()), singles),
                  std::invalid_argument);

  Rng rng(302);
  for (int i = 0; i < 40; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(6));
    auto base = random_valid_base(rng, alg);
    for (std::size_t x = 0; x < alg.size(); ++x) {
      auto nx = neighborhood_filter(x, base);
      CHECK(minimal_cauchy(nx, base) == nx);  // fixed point
    }
  }
}

TEST_CASE("Cauchy equivalence on the stated examples") {
  FiniteSetAlgebra two(2);
  CoverBase singles(two, {singleton_cover(two)});
  auto u0 = Filter::principal(two, two.region_of({0}));
  auto u1 = Filter::principal(two, two.region_of({1}));
  CHECK(cauchy_equivalent(u0, u0, singles));
  CHECK_FALSE(cauchy_equivalent(u0, u1, singles));
  CHECK_THROWS_AS(cauchy_equivalent(Filter::principal(two, two.carrier_region()), u0, singles),
                  std::invalid_argument);

  auto tower = residue_tower_base(2, 3);
  std::vector<FiniteCover> covers(tower.covers().begin(), tower.covers().end() - 1);
  CoverBase depth2(tower.alg(), covers);
  auto a = Filter::principal(tower.alg(), tower.alg().region_of({1}));
  auto b = Filter::principal(tower.alg(), tower.alg().region_of({5}));
  CHECK(cauchy_equivalent(a, b, depth2));
}

TEST_CASE("equivalence is an equivalence relation matching minimalization") {
  Rng rng(303);
  for (int i = 0; i < 30; ++i) {
    FiniteSetAlgebra alg(2 + rng.below(5));
    auto base = random_valid_base(rng, alg);
    std::vector<Filter> cauchy;
    for (std::size_t x = 0; x < alg.size(); ++x)
      cauchy.push_back(Filter::principal(alg, alg.point_region(x)));
    for (const auto& f : cauchy)
      for (const auto& g : cauchy) {
        bool eq = cauchy_equivalent(f, g, base);
        CHECK(eq == cauchy_equivalent(g, f, base));
        CHECK(eq == (minimal_cauchy(f, base) == minimal_cauchy(g, base)));
      }
  }
}

TEST_CASE("completion points on the stated examples") {
  FiniteSetAlgebra two(2);
  CHECK(completion_points(CoverBase(two, {singleton_cover(two)})).size() == 2);
  CHECK(completion_points(CoverBase(two, {make_cover(two, {{0, 1}})})).size() == 1);

  auto tower = residue_tower_base(2, 3);
  std::vector<FiniteCover> covers(tower.covers().begin(), tower.covers().end() - 1);
  CHECK(completion_points(CoverBase(tower.alg(), covers)).size() == 4);
}

TEST_CASE("completion of a Hausdorff finite space is the space itself") {
  Rng rng(304);
  for (int i = 0; i < 40; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(6));
    auto base = random_valid_base(rng, alg);
    auto points = completion_points(base);
    for (std::size_t x = 0; x < alg.size(); ++x) {
      auto nx = neighborhood_filter(x, base);
      bool found = false;
      for (const auto& q : points) found = found || q == nx;
      CHECK(found);
    }
    if (check_hausdorff(base)) CHECK(points.size() == alg.size());
    CHECK(totally_bounded(base));
  }
}

TEST_CASE("residue tower counting law") {
  CHECK(completion_points(residue_tower_base(2, 0)).size() == 1);
  CHECK(completion_points(residue_tower_base(2, 2)).size() == 4);
  CHECK(completion_points(residue_tower_base(3, 2)).size() == 9);
}

TEST_CASE("the literal filter order never separates anything") {
  FiniteSetAlgebra alg(3);
  auto f = Filter::principal(alg, alg.region_of({0}));
  auto g = Filter::principal(alg, alg.region_of({1, 2}));
  CHECK(filter_refines_literal(f, g));
  CHECK(filter_refines_literal(g, f));
  CHECK_FALSE(filter_subset(f, g));
  CHECK(filter_subset(f, f));
}
