#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace unicover {

// Exact rational scalar. GMP's canonical form (reduced, positive
// denominator) is maintained by mpq_class itself.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialized form is GMP's: "n" for integers, "n/d" otherwise.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Exact power of p dividing x, for nonzero rational x.  Negative when p
// divides the denominator.
inline long padic_valuation(const Rat& x, long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  if (!is_prime(p)) throw std::invalid_argument("valuation base must be prime");
  mpz_class pz(p), scratch;
  long vn = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
  return vn - vd;
}

}  // namespace unicover
