#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "unicover/cover.hpp"
#include "unicover/finite.hpp"

using namespace unicover;
using testsup::Rng;

namespace {

FiniteCover make_cover(const FiniteSetAlgebra& alg, std::vector<std::vector<std::size_t>> sets) {
  std::vector<FiniteRegion> regions;
  for (auto& s : sets) regions.push_back(alg.region_of(s));
  return FiniteCover(alg, std::move(regions));
}

}  // namespace

// Carrier {1,2,3,4} is written as indices 0..3 throughout.

TEST_CASE("refines on the stated examples") {
  FiniteSetAlgebra alg(4);
  auto c = make_cover(alg, {{0, 1}, {1, 2}, {2, 3}});
  auto d = make_cover(alg, {{0, 1, 2}, {1, 2, 3}});
  CHECK(refines(c, d));
  CHECK(refines(c, c));
  CHECK_FALSE(refines(make_cover(alg, {{0, 1, 2, 3}}), make_cover(alg, {{0, 1}, {2, 3}})));
  FiniteSetAlgebra other(3);
  CHECK_THROWS_AS(refines(c, make_cover(other, {{0, 1, 2}})), std::invalid_argument);
}

TEST_CASE("precise_refines is index-aligned") {
  FiniteSetAlgebra alg(3);
  auto c = make_cover(alg, {{0}, {1, 2}});
  auto d = make_cover(alg, {{0, 1}, {1, 2}});
  CHECK(precise_refines(c, d));
  CHECK_FALSE(precise_refines(make_cover(alg, {{1, 2}, {0}}), d));
  CHECK_FALSE(precise_refines(c, make_cover(alg, {{0}, {1}, {2}})));
}

TEST_CASE("intersection_cover on the stated examples") {
  FiniteSetAlgebra alg(3);
  auto c = make_cover(alg, {{0, 1}, {1, 2}});
  auto d = make_cover(alg, {{0}, {1, 2}});
  auto meet = intersection_cover(c, d);
  CHECK(covers_equal(meet, make_cover(alg, {{0}, {1}, {1, 2}})));
  CHECK(covers_equal(intersection_cover(c, make_cover(alg, {{0, 1, 2}})), c));
  auto singletons = make_cover(alg, {{0}, {1}, {2}});
  CHECK(covers_equal(intersection_cover(singletons, singletons), singletons));
}

TEST_CASE("star of a region and of the empty set") {
  FiniteSetAlgebra alg(4);
  auto c = make_cover(alg, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(star(alg.region_of({1, 2}), c) == alg.region_of({0, 1, 2, 3}));
  CHECK(star(alg.region_of({0}), c) == alg.region_of({0, 1}));
  CHECK(star(alg.empty_region(), c) == alg.empty_region());
}

TEST_CASE("star and delta covers on the running example") {
  FiniteSetAlgebra alg(4);
  auto c = make_cover(alg, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(covers_equal(star_cover(c), make_cover(alg, {{0, 1, 2}, {0, 1, 2, 3}, {1, 2, 3}})));
  CHECK(covers_equal(delta_cover(c), make_cover(alg, {{0, 1}, {0, 1, 2}, {1, 2, 3}, {2, 3}})));
  auto trivial = make_cover(alg, {{0, 1, 2, 3}});
  CHECK(covers_equal(star_cover(trivial), trivial));
}

TEST_CASE("star and delta refinement checks") {
  FiniteSetAlgebra alg(4);
  auto c = make_cover(alg, {{0, 1}, {1, 2}, {2, 3}});
  auto d = make_cover(alg, {{0, 1, 2}, {1, 2, 3}});
  CHECK(delta_refines(c, d));
  CHECK_FALSE(star_refines(c, d));
  CHECK(star_refines(c, make_cover(alg, {{0, 1, 2, 3}})));
}

TEST_CASE("shrinking construction on the stated example") {
  FiniteSetAlgebra alg(3);
  auto d = make_cover(alg, {{0, 1}, {1, 2}});
  auto shrink = make_cover(alg, {{0}, {1, 2}});
  auto refined = shrink_to_delta_refinement(d, shrink);
  CHECK(covers_equal(refined, make_cover(alg, {{0}, {1}, {1, 2}})));
  CHECK(star(alg.point_region(0), refined) == alg.region_of({0}));
  CHECK(star(alg.point_region(1), refined) == alg.region_of({1, 2}));
  CHECK(star(alg.point_region(2), refined) == alg.region_of({1, 2}));
  CHECK(delta_refines(refined, d));

  auto trivial = make_cover(alg, {{0, 1, 2}});
  CHECK(covers_equal(shrink_to_delta_refinement(trivial, trivial), trivial));

  // {{0},{2}} is not a cover, so it cannot even be constructed
  CHECK_THROWS_AS(make_cover(alg, {{0}, {2}}), std::invalid_argument);
  // and a non-precise shrink is rejected
  CHECK_THROWS_AS(shrink_to_delta_refinement(d, make_cover(alg, {{1, 2}, {0}})), std::invalid_argument);
}

TEST_CASE("cover construction drops empties and duplicates, rejects non-covers") {
  FiniteSetAlgebra alg(3);
  FiniteCover c(alg, {alg.region_of({0, 1}), alg.empty_region(), alg.region_of({0, 1}), alg.region_of({2})});
  CHECK(c.size() == 2);
  CHECK_THROWS_AS(FiniteCover(alg, {alg.region_of({0})}), std::invalid_argument);
}

TEST_CASE("star-delta chain and monotonicity on random covers") {
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(8));
    auto c = testsup::random_cover(rng, alg);
    auto cs = star_cover(c);
    auto cd = delta_cover(c);
    CHECK(refines(cd, cs));
    CHECK(refines(cs, delta_cover(cd)));

    // C < D through an intersection witness
    auto e = testsup::random_cover(rng, alg);
    auto fine = intersection_cover(c, e);
    CHECK(refines(fine, c));
    CHECK(refines(fine, e));
    CHECK(refines(star_cover(fine), cs));
    CHECK(refines(delta_cover(fine), cd));

    // star refinement is the stronger relation
    if (star_refines(fine, c)) CHECK(delta_refines(fine, c));
  }
}

TEST_CASE("metric ball covers: thirds star-refine, halves delta-refine") {
  Rng rng(102);
  for (int i = 0; i < 60; ++i) {
    auto metric = testsup::random_metric(rng, 2 + rng.below(7));
    for (int j = 0; j < 3; ++j) {
      Rat eps = make_rat(rng.range(1, 40), rng.range(1, 5));
      auto coarse = metric.ball_cover(eps);
      CHECK(star_refines(metric.ball_cover(eps / 3), coarse));
      CHECK(delta_refines(metric.ball_cover(eps / 2), coarse));
    }
  }
}

TEST_CASE("shrink_to_delta_refinement always delta-refines on random pairs") {
  Rng rng(103);
  for (int i = 0; i < 150; ++i) {
    FiniteSetAlgebra alg(1 + rng.below(8));
    auto [d, shrink] = testsup::random_precise_pair(rng, alg);
    CHECK(delta_refines(shrink_to_delta_refinement(d, shrink), d));
  }
}
