#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "unicover/rat.hpp"

namespace unicover {

/**
 * A non-archimedean absolute value p^(-q), stored as the exponent q.
 *
 * q ranges over the rationals together with +infinity; the infinite
 * exponent denotes the absolute value 0 and is absorbing under
 * multiplication.  All order comparisons reverse the exponent order.
 * Magnitudes are never materialized as floating point.
 */
class AbsValue {
 public:
  // p^(-q) for finite rational q.
  AbsValue(long prime, Rat exponent) : prime_(prime), exponent_(std::move(exponent)), infinite_(false) {
    if (!is_prime(prime_)) throw std::invalid_argument("AbsValue: prime required");
  }

  // The absolute value 0 (exponent +infinity).  Only reachable through
  // this named constructor, never through padic_abs.
  static AbsValue zero(long prime) {
    AbsValue v(prime, Rat(0));
    v.infinite_ = true;
    v.exponent_ = 0;
    return v;
  }

  static AbsValue one(long prime) { return AbsValue(prime, Rat(0)); }

  long prime() const { return prime_; }
  bool is_zero() const { return infinite_; }
  bool exponent_finite() const { return !infinite_; }

  const Rat& exponent() const {
    if (infinite_) throw std::domain_error("AbsValue: exponent of zero value is infinite");
    return exponent_;
  }

  AbsValue operator*(const AbsValue& o) const {
    check_same_prime(o);
    if (infinite_ || o.infinite_) return zero(prime_);
    return AbsValue(prime_, exponent_ + o.exponent_);
  }

  AbsValue pow(long k) const {
    if (infinite_) {
      if (k <= 0) throw std::domain_error("AbsValue: 0^k for k <= 0");
      return zero(prime_);
    }
    return AbsValue(prime_, exponent_ * k);
  }

  // Scale by p^(-dq): multiplication expressed directly on exponents.
  AbsValue scaled(const Rat& dq) const {
    if (infinite_) return *this;
    return AbsValue(prime_, exponent_ + dq);
  }

  bool operator==(const AbsValue& o) const {
    check_same_prime(o);
    if (infinite_ != o.infinite_) return false;
    return infinite_ || exponent_ == o.exponent_;
  }
  bool operator!=(const AbsValue& o) const { return !(*this == o); }
  // |a| < |b|  iff  q_a > q_b, with exponent +infinity smallest of all.
  bool operator<(const AbsValue& o) const {
    check_same_prime(o);
    if (infinite_) return !o.infinite_;
    if (o.infinite_) return false;
    return exponent_ > o.exponent_;
  }
  bool operator<=(const AbsValue& o) const { return *this < o || *this == o; }
  bool operator>(const AbsValue& o) const { return o < *this; }
  bool operator>=(const AbsValue& o) const { return o <= *this; }

  std::string exponent_string() const { return infinite_ ? "inf" : rat_to_string(exponent_); }

  static AbsValue from_exponent_string(long prime, const std::string& s) {
    if (s == "inf") return zero(prime);
    return AbsValue(prime, rat_from_string(s));
  }

 private:
  void check_same_prime(const AbsValue& o) const {
    if (prime_ != o.prime_) throw std::invalid_argument("AbsValue: mixed primes");
  }

  long prime_;
  Rat exponent_;
  bool infinite_;
};

// |x|_p = p^(-v_p(x)) for nonzero rational x.  Zero is rejected here; use
// AbsValue::zero for the distinguished zero value.
inline AbsValue padic_abs(const Rat& x, long prime) {
  if (x == 0) throw std::invalid_argument("padic_abs: zero has no finite valuation");
  return AbsValue(prime, Rat(padic_valuation(x, prime)));
}

// Membership in the value group p^Q: exactly the finite exponents.
inline bool in_value_group(const AbsValue& a) { return a.exponent_finite(); }

// The density step: the value whose exponent is the midpoint of the two
// exponents.  Requires a < b; the result lies strictly between them and in
// the value group.
inline AbsValue strictly_between(const AbsValue& a, const AbsValue& b) {
  if (!a.exponent_finite() || !b.exponent_finite())
    throw std::invalid_argument("strictly_between: finite exponents required");
  if (!(a < b)) throw std::invalid_argument("strictly_between: empty interval");
  return AbsValue(a.prime(), (a.exponent() + b.exponent()) / 2);
}

}  // namespace unicover
