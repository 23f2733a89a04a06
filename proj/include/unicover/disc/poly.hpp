#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unicover/abs_value.hpp"
#include "unicover/disc/disk.hpp"
#include "unicover/rat.hpp"

namespace unicover::disc {

/**
 * A polynomial split into linear factors over Q:
 *   c * prod (T - a_i)^{m_i}.
 * Duplicate roots are merged on construction.  The zero polynomial is a
 * distinguished value with lead 0 and no roots.
 */
class FactoredPoly {
 public:
  using RootList = std::vector<std::pair<Rat, long>>;

  FactoredPoly(Rat lead, RootList roots) : lead_(std::move(lead)) {
    if (lead_ == 0) throw std::invalid_argument("factored polynomial needs a nonzero lead; use zero()");
    for (auto& [root, mult] : roots) {
      if (mult <= 0) throw std::invalid_argument("root multiplicity must be positive");
      bool merged = false;
      for (auto& [seen, m] : roots_)
        if (seen == root) {
          m += mult;
          merged = true;
          break;
        }
      if (!merged) roots_.emplace_back(std::move(root), mult);
    }
  }

  static FactoredPoly zero() { return FactoredPoly(); }
  static FactoredPoly constant(Rat c) { return FactoredPoly(std::move(c), {}); }
  // The coordinate function T - a.
  static FactoredPoly linear(Rat a) { return FactoredPoly(Rat(1), {{std::move(a), 1}}); }

  bool is_zero() const { return lead_ == 0; }
  const Rat& lead() const { return lead_; }
  const RootList& roots() const { return roots_; }
  long degree() const {
    long d = 0;
    for (const auto& [root, mult] : roots_) d += mult;
    return d;
  }

  FactoredPoly operator*(const FactoredPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    RootList combined = roots_;
    combined.insert(combined.end(), o.roots_.begin(), o.roots_.end());
    return FactoredPoly(lead_ * o.lead_, std::move(combined));
  }

  // Exact rational value at a rational argument.
  Rat eval(const Rat& x) const {
    if (is_zero()) return Rat(0);
    Rat value = lead_;
    for (const auto& [root, mult] : roots_) {
      Rat factor = x - root;
      for (long k = 0; k < mult; ++k) value *= factor;
    }
    return value;
  }

  // Dense coefficient vector, constant term first.
  std::vector<Rat> coefficients() const;

 private:
  FactoredPoly() : lead_(0) {}
  Rat lead_;
  RootList roots_;
};

/**
 * The multiplicative seminorm attached to a disc point, evaluated on a
 * factored polynomial.  On a closed disk D(a, r) this is the Gauss norm
 *   |c| * prod max(|a - a_i|, r)^{m_i},
 * computed purely on exponents.  For a type IV point the value is exact
 * as soon as every root has left some prefix disk (all later factors are
 * then pinned by the ultrametric); until that depth the value is
 * genuinely undetermined and try_seminorm returns nothing.
 */
std::optional<AbsValue> try_seminorm(const FactoredPoly& f, const BerkPoint& x);

// Throwing form: requires kinds I/II, or a type IV prefix deep enough for
// the value to have stabilized.
AbsValue seminorm(const FactoredPoly& f, const BerkPoint& x);

// Gauss norm of f on an explicit closed disk.
AbsValue seminorm_on_disk(const FactoredPoly& f, const Disk& d);

// Largest value the seminorm can still take at a type IV point given its
// prefix: the value at the deepest stored disk.
AbsValue seminorm_upper_bound(const FactoredPoly& f, const BerkPoint& x);

// Attempt to write a polynomial, given by coefficients (constant term
// first), as a product of linear factors over Q.  Returns nothing when an
// irreducible factor of higher degree remains.  Root search is limited to
// bounded-height rationals, which covers the factored-data arithmetic this
// library generates.
std::optional<FactoredPoly> refactor(const std::vector<Rat>& coefficients);

// Coefficientwise sum of two factored polynomials (constant term first).
std::vector<Rat> sum_coefficients(const FactoredPoly& f, const FactoredPoly& g);

}  // namespace unicover::disc
