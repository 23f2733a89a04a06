#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "unicover/disc/poly.hpp"

using namespace unicover;
using namespace unicover::disc;
using testsup::Rng;

namespace {

AbsValue radius(long p, long num, long den = 1) { return AbsValue(p, make_rat(num, den)); }

// Sampling oracle: the largest |f(x)| over rational samples of a closed
// disk with integer radius exponent.  Samples never exceed the Gauss norm
// (it is the supremum), and for integer exponents some sample attains it.
AbsValue sampled_sup(Rng& rng, const FactoredPoly& f, const Rat& center, long radius_exp, long p,
                     int samples = 160) {
  AbsValue best = AbsValue::zero(p);
  Rat step(1);
  for (long i = 0; i < radius_exp; ++i) step *= p;  // the rational p^q has |.|_p = p^-q
  for (int s = 0; s < samples; ++s) {
    long unit = 0;
    while (unit % p == 0) unit = rng.range(1, 40);
    long extra = static_cast<long>(rng.below(4));
    Rat offset = Rat(unit) * step;
    for (long i = 0; i < extra; ++i) offset *= p;  // deeper into the disk
    Rat x = rng.chance(1, 8) ? center : center + offset;
    Rat value = f.eval(x);
    if (value == 0) continue;
    best = std::max(best, padic_abs(value, p));
  }
  return best;
}

}  // namespace

TEST_CASE("seminorm on the stated examples") {
  long p = 2;
  FactoredPoly t = FactoredPoly::linear(Rat(0));
  CHECK(seminorm(t, BerkPoint::type2(Disk(Rat(0), radius(p, 1)))) == radius(p, 1));

  FactoredPoly t_minus_2 = FactoredPoly::linear(Rat(2));
  CHECK(seminorm(t_minus_2, BerkPoint::gauss(p)) == AbsValue::one(p));

  FactoredPoly f(Rat(3), {{Rat(1), 1}, {Rat(2), 1}});
  CHECK(seminorm(f, BerkPoint::type2(Disk(Rat(0), radius(p, 2)))) == radius(p, 1));
}

TEST_CASE("sampling oracle agrees with the closed-form Gauss norm") {
  Rng rng(601);
  for (int i = 0; i < 60; ++i) {
    long p = testsup::random_prime(rng);
    FactoredPoly f = testsup::random_poly(rng, p);
    if (f.degree() == 0) continue;
    Rat center = testsup::random_disc_rat(rng, p);
    long q = rng.range(0, 4);  // integer exponent: rational samples reach the sup
    AbsValue exact = seminorm(f, q == 0 && center == 0
                                     ? BerkPoint::gauss(p)
                                     : BerkPoint::type2(Disk(center, radius(p, q))));
    AbsValue sampled = sampled_sup(rng, f, center, q, p);
    CHECK(sampled <= exact);
    CHECK(sampled == exact);
  }
}

TEST_CASE("seminorm axioms: zero, one, multiplicativity") {
  Rng rng(602);
  for (int i = 0; i < 200; ++i) {
    long p = testsup::random_prime(rng);
    BerkPoint x = testsup::random_point(rng, p);
    CHECK(seminorm(FactoredPoly::zero(), x).is_zero());
    CHECK(seminorm(FactoredPoly::constant(Rat(1)), x) == AbsValue::one(p));
    FactoredPoly f = testsup::random_poly(rng, p);
    FactoredPoly g = testsup::random_poly(rng, p);
    CHECK(seminorm(f * g, x) == seminorm(f, x) * seminorm(g, x));
  }
}

TEST_CASE("type I seminorms equal the p-adic value of the evaluation") {
  Rng rng(603);
  for (int i = 0; i < 300; ++i) {
    long p = testsup::random_prime(rng);
    FactoredPoly f = testsup::random_poly(rng, p);
    Rat a = testsup::random_disc_rat(rng, p);
    Rat value = f.eval(a);
    AbsValue direct = value == 0 ? AbsValue::zero(p) : padic_abs(value, p);
    CHECK(seminorm(f, BerkPoint::type1(p, a)) == direct);
  }
}

TEST_CASE("seminorm is monotone along nested disks") {
  Rng rng(604);
  for (int i = 0; i < 200; ++i) {
    long p = testsup::random_prime(rng);
    FactoredPoly f = testsup::random_poly(rng, p);
    Rat center = testsup::random_disc_rat(rng, p);
    Rat q = testsup::random_radius_exponent(rng);
    AbsValue outer = seminorm(f, BerkPoint::type2(Disk(center, AbsValue(p, q))));
    AbsValue inner = seminorm(f, BerkPoint::type2(Disk(center, AbsValue(p, q + make_rat(1, 2)))));
    AbsValue point = seminorm(f, BerkPoint::type1(p, center));
    CHECK(inner <= outer);
    CHECK(point <= inner);
  }
}

TEST_CASE("ultrametric subadditivity, exact where the sum refactors") {
  Rng rng(605);
  int exact_route = 0, sampled_route = 0;
  for (int i = 0; i < 300; ++i) {
    long p = testsup::random_prime(rng);
    FactoredPoly f = testsup::random_poly(rng, p, 2);
    FactoredPoly g = rng.chance(1, 3) ? FactoredPoly(testsup::random_nonzero_rat(rng, 9, 6), f.roots())
                                      : testsup::random_poly(rng, p, 2);
    auto sum = refactor(sum_coefficients(f, g));
    if (sum) {
      ++exact_route;
      for (int k = 0; k < 6; ++k) {
        BerkPoint x = testsup::random_point(rng, p);
        CHECK(seminorm(*sum, x) <= std::max(seminorm(f, x), seminorm(g, x)));
      }
    } else {
      ++sampled_route;
      for (int k = 0; k < 60; ++k) {
        Rat a = testsup::random_disc_rat(rng, p);
        Rat value = f.eval(a) + g.eval(a);
        if (value == 0) continue;
        AbsValue vf = f.eval(a) == 0 ? AbsValue::zero(p) : padic_abs(f.eval(a), p);
        AbsValue vg = g.eval(a) == 0 ? AbsValue::zero(p) : padic_abs(g.eval(a), p);
        CHECK(padic_abs(value, p) <= std::max(vf, vg));
      }
    }
  }
  CHECK(exact_route > 20);
  CHECK(sampled_route > 20);
}

TEST_CASE("type IV seminorms stabilize once every root leaves the prefix") {
  long p = 2;
  std::vector<Disk> nest = {Disk(Rat(1), radius(p, 1)), Disk(Rat(3), radius(p, 2)),
                            Disk(Rat(7), radius(p, 3))};
  auto x = BerkPoint::type4(nest);

  // the root 0 already left the first disk: exact value |center| = 1
  CHECK(seminorm(FactoredPoly::linear(Rat(0)), x) == AbsValue::one(p));
  // the root 7 still sits in the deepest stored disk: indeterminate
  CHECK_FALSE(try_seminorm(FactoredPoly::linear(Rat(7)), x).has_value());
  CHECK_THROWS_AS(seminorm(FactoredPoly::linear(Rat(7)), x), std::domain_error);
  CHECK(seminorm_upper_bound(FactoredPoly::linear(Rat(7)), x) == radius(p, 3));
}

TEST_CASE("coefficient expansion and refactoring round trip") {
  Rng rng(606);
  for (int i = 0; i < 120; ++i) {
    long p = testsup::random_prime(rng);
    FactoredPoly f = testsup::random_poly(rng, p);
    auto coeffs = f.coefficients();
    auto back = refactor(coeffs);
    REQUIRE(back.has_value());
    CHECK(back->lead() == f.lead());
    CHECK(back->degree() == f.degree());
    for (int k = 0; k < 4; ++k) {
      Rat a = testsup::random_nonzero_rat(rng);
      CHECK(back->eval(a) == f.eval(a));
    }
  }
  CHECK_FALSE(refactor({Rat(1), Rat(0), Rat(1)}).has_value());  // T^2 + 1
  CHECK(refactor({Rat(0)})->is_zero());
}
