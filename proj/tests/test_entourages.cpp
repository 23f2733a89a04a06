#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "unicover/entourages.hpp"

using namespace unicover;
using testsup::Rng;

TEST_CASE("entourage axioms on the stated examples") {
  SUBCASE("diagonal plus full square passes") {
    auto report = check_entourage_axioms({Entourage::diagonal(2), Entourage::full(2)});
    CHECK(report.all_hold());
  }
  SUBCASE("an unsymmetric entourage fails E2") {
    Entourage e = Entourage::diagonal(2);
    e.set(0, 1);
    auto report = check_entourage_axioms({e});
    CHECK(report.e1.holds);
    CHECK_FALSE(report.e2.holds);
  }
  SUBCASE("the full square alone passes") {
    CHECK(check_entourage_axioms({Entourage::full(2)}).all_hold());
  }
}

TEST_CASE("covers to entourages on the stated examples") {
  FiniteSetAlgebra two(2);
  std::vector<FiniteRegion> singles = {two.point_region(0), two.point_region(1)};
  CoverBase single_base(two, {FiniteCover(two, singles)});
  CHECK(covers_to_entourages(single_base)[0] == Entourage::diagonal(2));

  CoverBase trivial(two, {FiniteCover(two, {two.carrier_region()})});
  CHECK(covers_to_entourages(trivial)[0] == Entourage::full(2));

  FiniteSetAlgebra three(3);
  CoverBase chain(three, {FiniteCover(three, {three.region_of({0, 1}), three.region_of({1, 2})})});
  Entourage expected(3);
  for (std::size_t x : {0, 1})
    for (std::size_t y : {0, 1}) expected.set(x, y);
  for (std::size_t x : {1, 2})
    for (std::size_t y : {1, 2}) expected.set(x, y);
  CHECK(covers_to_entourages(chain)[0] == expected);
}

TEST_CASE("entourages to covers on the stated examples") {
  FiniteSetAlgebra two(2);
  auto by_diagonal = entourages_to_covers({Entourage::diagonal(2)});
  CHECK(by_diagonal(FiniteCover(two, {two.point_region(0), two.point_region(1)})));
  CHECK(by_diagonal(FiniteCover(two, {two.carrier_region()})));

  auto by_full = entourages_to_covers({Entourage::full(2)});
  CHECK_FALSE(by_full(FiniteCover(two, {two.point_region(0), two.point_region(1)})));
  CHECK(by_full(FiniteCover(two, {two.carrier_region()})));

  FiniteSetAlgebra three(3);
  CoverBase chain(three, {FiniteCover(three, {three.region_of({0, 1}), three.region_of({1, 2})})});
  auto pred = entourages_to_covers(covers_to_entourages(chain));
  CHECK_FALSE(pred(chain[0]));  // the section at the middle point spans everything
}

TEST_CASE("round trips against exhaustive cover enumeration") {
  Rng rng(401);
  int bases_tested = 0;
  while (bases_tested < 25) {
    FiniteSetAlgebra alg(1 + rng.below(4));
    CoverBase base = testsup::random_base(rng, alg);
    if (!check_base(base).c2.holds) continue;
    ++bases_tested;

    auto entourages = covers_to_entourages(base);
    // round trip B: the induced entourage base satisfies the axioms
    CHECK(check_entourage_axioms(entourages).all_hold());

    // round trip A: the induced uniformity matches refinement into the base
    auto pred = entourages_to_covers(entourages);
    for (const auto& cover : testsup::all_covers(alg)) CHECK(pred(cover) == is_uniform_cover(cover, base));
  }
}
