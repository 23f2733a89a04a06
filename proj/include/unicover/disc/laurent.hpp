#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unicover/disc/poly.hpp"
#include "unicover/disc/region.hpp"

namespace unicover::disc {

enum class ConstraintOp { LT, LE, GT, GE };

inline bool op_is_strict(ConstraintOp op) { return op == ConstraintOp::LT || op == ConstraintOp::GT; }
inline bool op_is_upper(ConstraintOp op) { return op == ConstraintOp::LT || op == ConstraintOp::LE; }
inline ConstraintOp op_closure(ConstraintOp op) {
  switch (op) {
    case ConstraintOp::LT: return ConstraintOp::LE;
    case ConstraintOp::GT: return ConstraintOp::GE;
    default: return op;
  }
}

// One half-inequality |f| op bound, with the bound in the value group.
struct Constraint {
  FactoredPoly poly;
  AbsValue bound;
  ConstraintOp op;

  Constraint(FactoredPoly p, AbsValue b, ConstraintOp o) : poly(std::move(p)), bound(std::move(b)), op(o) {
    if (poly.is_zero()) throw std::invalid_argument("constraint on the zero polynomial");
    if (!in_value_group(bound)) throw std::invalid_argument("constraint bound must lie in the value group");
  }
};

/**
 * A Laurent domain of the closed unit disc, cut out by finitely many
 * constraints on factored polynomials.  The open form uses strict ops
 * throughout, the closed form non-strict ops; no constraints at all means
 * the whole disc.
 */
class LaurentDomain {
 public:
  LaurentDomain(long prime, std::vector<Constraint> constraints)
      : prime_(prime), constraints_(std::move(constraints)) {
    for (const auto& c : constraints_)
      if (c.bound.prime() != prime_) throw std::invalid_argument("constraint prime mismatch");
  }

  static LaurentDomain whole_disc(long prime) { return LaurentDomain(prime, {}); }

  long prime() const { return prime_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  bool is_open() const {
    for (const auto& c : constraints_)
      if (!op_is_strict(c.op)) return false;
    return true;
  }
  bool is_closed() const {
    for (const auto& c : constraints_)
      if (op_is_strict(c.op)) return false;
    return true;
  }

  // Closed form with the same polynomials and bounds.
  LaurentDomain closure() const {
    std::vector<Constraint> cs;
    cs.reserve(constraints_.size());
    for (const auto& c : constraints_) cs.emplace_back(c.poly, c.bound, op_closure(c.op));
    return LaurentDomain(prime_, std::move(cs));
  }

  // Every bound tightened by p^(-dq): upper bounds shrink, lower bounds
  // grow, polynomials untouched.
  LaurentDomain tightened(const Rat& dq) const {
    std::vector<Constraint> cs;
    cs.reserve(constraints_.size());
    for (const auto& c : constraints_) {
      Rat q = c.bound.exponent();
      cs.emplace_back(c.poly, AbsValue(prime_, op_is_upper(c.op) ? Rat(q + dq) : Rat(q - dq)), c.op);
    }
    return LaurentDomain(prime_, std::move(cs));
  }

  // The domain cut out by the constraints of both inputs.
  static LaurentDomain combined(const LaurentDomain& a, const LaurentDomain& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("combined: prime mismatch");
    std::vector<Constraint> cs = a.constraints_;
    cs.insert(cs.end(), b.constraints_.begin(), b.constraints_.end());
    return LaurentDomain(a.prime(), std::move(cs));
  }

 private:
  long prime_;
  std::vector<Constraint> constraints_;
};

enum class Ternary { False, True, Indeterminate };

// Pointwise membership through the seminorm.  Type IV points answer
// definitely whenever every constraint is decided at the stored prefix
// depth: a stabilized value decides any comparison, a not-yet-stabilized
// value still certifies |f| < a once some prefix value drops below a, and
// refutes |g| > b once some prefix value reaches b (values only shrink
// along the nest).
Ternary member(const LaurentDomain& u, const BerkPoint& x);

// Exact region denoted by the domain.  Each constraint's solution set is
// a union of root-centered disks (or its complement), read off from the
// piecewise-linear exponent profile of the Gauss norm along each root's
// branch; constraints then intersect in the cell calculus.  The result
// agrees with member() at every type I and II point.
RegionUnion to_region(const LaurentDomain& u);

// No type I or II point lies in the region.
bool emptiness(const RegionUnion& r);

// Every point of the disc lies in some domain.  Decided exactly through
// the cell calculus: the complements are intersected and tested for
// emptiness.  Coverage of type IV points follows, because every
// constraint value stabilizes along a nest with empty intersection, so an
// uncovered type IV point would force an uncovered type II witness deep
// in its prefix.
bool covers_disc(const std::vector<LaurentDomain>& domains);

// Uncovered witness, when one exists.
std::optional<BerkPoint> covers_disc_witness(const std::vector<LaurentDomain>& domains);

struct MaxModResult {
  AbsValue min;
  AbsValue max;
  BerkPoint argmin;
  BerkPoint argmax;
  // min == 0 happens exactly when f vanishes somewhere in the region; the
  // value-group membership claim is then waived for the minimum.
  bool min_in_value_group() const { return in_value_group(min); }
};

// Exact minimum and maximum of |f| over a nonempty region built from
// closed constraints.  Candidates: the top point of each cell, the top of
// each hole containing a root, and the roots themselves where they lie in
// the region.
MaxModResult maximum_modulus(const FactoredPoly& f, const RegionUnion& region);

class not_a_cover_error : public std::runtime_error {
 public:
  not_a_cover_error(std::string message, BerkPoint witness)
      : std::runtime_error(std::move(message)), witness_(std::move(witness)) {}
  const BerkPoint& witness() const { return witness_; }

 private:
  BerkPoint witness_;
};

struct ShrinkStep {
  std::size_t index = 0;
  Rat beta_exponent;                  // trial tightening
  bool z_beta_empty = false;          // trial already covered
  std::optional<Rat> margin_exponent; // worst constraint margin on Z_beta
  Rat gamma_exponent;                 // applied tightening
};

struct ShrinkResult {
  std::vector<LaurentDomain> closed;
  std::vector<ShrinkStep> steps;
};

/**
 * Constructive shrinking of an open Laurent cover into a closed precise
 * refinement that still covers.  Processes domains in input order; for
 * each one, a trial tightening by p^-1 either already leaves the rest of
 * the cover intact (Z empty), or the extreme values of the constraint
 * polynomials on the uncovered closed region Z give a positive worst
 * margin, and tightening by half that margin (a strictly_between pick)
 * empties Z.  The closures of the tightened domains are returned.
 *
 * Preconditions: all domains open, covers_disc true.  Throws
 * not_a_cover_error with an uncovered witness otherwise; an interior
 * contradiction (a margin that fails to be positive) throws logic_error,
 * which preconditions make unreachable.
 */
ShrinkResult shrink_cover_traced(const std::vector<LaurentDomain>& domains);
std::vector<LaurentDomain> shrink_cover(const std::vector<LaurentDomain>& domains);

// An open Laurent pair separating two distinct points of kinds I/II:
// x lies in the first domain only, y in the second only.
std::pair<LaurentDomain, LaurentDomain> separating_pair(const BerkPoint& x, const BerkPoint& y);

// Search for a rational disc point inside an open domain, guided by a
// point already known to lie there.  The search is exact but not
// complete: domains whose radius window contains no integer exponent have
// no rational points at all.
std::optional<Rat> rigid_point_in(const LaurentDomain& u, const BerkPoint& hint);

}  // namespace unicover::disc
