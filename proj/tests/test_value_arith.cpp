#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "unicover/abs_value.hpp"

using namespace unicover;
using testsup::Rng;

namespace {

// Independent oracle: valuation by explicit factoring of numerator and
// denominator.
long valuation_by_factoring(Rat x, long p) {
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

}  // namespace

TEST_CASE("padic_abs on the stated examples") {
  CHECK(padic_abs(Rat(1), 2).exponent() == 0);
  CHECK(padic_abs(Rat(8), 2).exponent() == 3);
  // oracle-derived: v_2(3/4) = -2
  CHECK(valuation_by_factoring(make_rat(3, 4), 2) == -2);
  CHECK(padic_abs(make_rat(3, 4), 2).exponent() == -2);

  CHECK_THROWS_AS(padic_abs(Rat(0), 2), std::invalid_argument);
  CHECK_THROWS_AS(padic_abs(Rat(1), 6), std::invalid_argument);
  CHECK(AbsValue::zero(2).is_zero());
}

TEST_CASE("value group membership") {
  CHECK(in_value_group(AbsValue(2, make_rat(5, 3))));
  CHECK(in_value_group(AbsValue(2, Rat(-7))));
  CHECK_FALSE(in_value_group(AbsValue::zero(2)));
}

TEST_CASE("strictly_between on the stated examples") {
  AbsValue a(2, Rat(2)), b(2, Rat(0));
  CHECK(strictly_between(a, b).exponent() == 1);
  CHECK(strictly_between(AbsValue(2, Rat(1)), AbsValue(2, make_rat(1, 2))).exponent() == make_rat(3, 4));
  CHECK_THROWS_AS(strictly_between(b, a), std::invalid_argument);
  CHECK_THROWS_AS(strictly_between(a, a), std::invalid_argument);
}

TEST_CASE("multiplicativity of padic_abs") {
  Rng rng(41);
  for (int i = 0; i < 400; ++i) {
    long p = testsup::random_prime(rng);
    Rat x = testsup::random_nonzero_rat(rng);
    Rat y = testsup::random_nonzero_rat(rng);
    CHECK(padic_abs(x * y, p) == padic_abs(x, p) * padic_abs(y, p));
    CHECK(padic_abs(x, p).exponent() == valuation_by_factoring(x, p));
  }
}

TEST_CASE("ultrametric inequality with equality off the diagonal") {
  Rng rng(42);
  for (int i = 0; i < 400; ++i) {
    long p = testsup::random_prime(rng);
    Rat x = testsup::random_nonzero_rat(rng);
    Rat y = testsup::random_nonzero_rat(rng);
    if (x + y == 0) continue;
    AbsValue ax = padic_abs(x, p), ay = padic_abs(y, p);
    AbsValue sum = padic_abs(x + y, p);
    CHECK(sum <= std::max(ax, ay));
    if (ax != ay) CHECK(sum == std::max(ax, ay));
  }
}

TEST_CASE("strictly_between lands strictly inside and in the value group") {
  Rng rng(43);
  for (int i = 0; i < 400; ++i) {
    long p = testsup::random_prime(rng);
    AbsValue a(p, testsup::random_nonzero_rat(rng));
    AbsValue b(p, testsup::random_nonzero_rat(rng));
    if (!(a < b)) std::swap(a, b);
    if (!(a < b)) continue;
    AbsValue m = strictly_between(a, b);
    CHECK(a < m);
    CHECK(m < b);
    CHECK(in_value_group(m));
  }
}

TEST_CASE("exponent serialization round trip") {
  CHECK(AbsValue(2, make_rat(-3, 4)).exponent_string() == "-3/4");
  CHECK(AbsValue::zero(5).exponent_string() == "inf");
  CHECK(AbsValue::from_exponent_string(2, "-3/4") == AbsValue(2, make_rat(-3, 4)));
  CHECK(AbsValue::from_exponent_string(5, "inf").is_zero());
  CHECK(AbsValue::from_exponent_string(3, "7") == AbsValue(3, Rat(7)));
  CHECK_THROWS_AS(AbsValue::from_exponent_string(2, "x/y"), std::invalid_argument);
}

TEST_CASE("absolute values reverse exponent order and absorb zero") {
  AbsValue small(2, Rat(3));  // 2^-3
  AbsValue big(2, Rat(1));    // 2^-1
  CHECK(small < big);
  CHECK(AbsValue::zero(2) < small);
  CHECK((small * AbsValue::zero(2)).is_zero());
  CHECK((small * big).exponent() == 4);
}
