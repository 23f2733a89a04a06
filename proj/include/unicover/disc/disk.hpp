#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "unicover/abs_value.hpp"
#include "unicover/rat.hpp"

namespace unicover::disc {

// |a - b|_p as an AbsValue, zero when the inputs coincide.
inline AbsValue abs_diff(const Rat& a, const Rat& b, long prime) {
  if (a == b) return AbsValue::zero(prime);
  return padic_abs(a - b, prime);
}

inline AbsValue abs_or_zero(const Rat& a, long prime) {
  if (a == 0) return AbsValue::zero(prime);
  return padic_abs(a, prime);
}

/**
 * A closed disk D(a, r) with rational center and radius in p^Q union {0}.
 * Radius zero denotes the single point {a}.  Equality and containment
 * follow the ultrametric rules, so any point of a disk re-centers it.
 */
class Disk {
 public:
  Disk(Rat center, AbsValue radius) : center_(std::move(center)), radius_(std::move(radius)) {}

  static Disk point(long prime, Rat center) { return Disk(std::move(center), AbsValue::zero(prime)); }

  long prime() const { return radius_.prime(); }
  const Rat& center() const { return center_; }
  const AbsValue& radius() const { return radius_; }

  // D(a', r') inside D(a, r): r' <= r and |a - a'| <= r.
  bool contains(const Disk& o) const {
    return o.radius_ <= radius_ && abs_diff(center_, o.center_, prime()) <= radius_;
  }
  bool contains_point(const Rat& x) const { return abs_diff(center_, x, prime()) <= radius_; }

  bool operator==(const Disk& o) const { return contains(o) && o.contains(*this); }
  bool operator!=(const Disk& o) const { return !(*this == o); }

  bool inside_unit_disc() const {
    return radius_ <= AbsValue::one(prime()) && abs_or_zero(center_, prime()) <= AbsValue::one(prime());
  }

 private:
  Rat center_;
  AbsValue radius_;
};

/**
 * A point of the Berkovich closed unit disc:
 *   type I   - a rational point of the disc (a zero-radius disk),
 *   type II  - a closed disk with positive radius in the value group,
 *   type IV  - a strictly decreasing nested disk prefix whose full
 *              intersection is declared empty.  The prefix is all the
 *              finite data there is, so some queries about such a point
 *              are answered only up to the stored depth.
 */
class BerkPoint {
 public:
  enum class Kind { I, II, IV };

  static BerkPoint type1(long prime, Rat center) {
    return BerkPoint(Kind::I, {Disk::point(prime, std::move(center))});
  }

  static BerkPoint type2(Disk disk) {
    if (disk.radius().is_zero() || !in_value_group(disk.radius()))
      throw std::invalid_argument("type II point needs a positive value-group radius");
    return BerkPoint(Kind::II, {std::move(disk)});
  }

  static BerkPoint gauss(long prime) { return type2(Disk(Rat(0), AbsValue::one(prime))); }

  // The caller declares the nest's intersection empty; only the prefix is
  // retained.
  static BerkPoint type4(std::vector<Disk> prefix) {
    if (prefix.size() < 2) throw std::invalid_argument("type IV prefix needs at least two disks");
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
      if (!prefix[i].contains(prefix[i + 1]) || prefix[i] == prefix[i + 1])
        throw std::invalid_argument("type IV prefix must be strictly nested");
    }
    return BerkPoint(Kind::IV, std::move(prefix));
  }

  Kind kind() const { return kind_; }
  long prime() const { return disks_.front().prime(); }

  // For kinds I and II: the defining disk.
  const Disk& disk() const {
    if (kind_ == Kind::IV) throw std::domain_error("type IV point has no single disk");
    return disks_.front();
  }

  const std::vector<Disk>& prefix() const { return disks_; }
  const Disk& deepest() const { return disks_.back(); }

  bool operator==(const BerkPoint& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::IV) return disks_ == o.disks_;  // identity of the stored data
    return disks_.front() == o.disks_.front();
  }

 private:
  BerkPoint(Kind kind, std::vector<Disk> disks) : kind_(kind), disks_(std::move(disks)) {
    for (const auto& d : disks_)
      if (!d.inside_unit_disc()) throw std::invalid_argument("point outside the closed unit disc");
  }

  Kind kind_;
  std::vector<Disk> disks_;  // one disk for kinds I and II, the prefix for IV
};

enum class PartialOrder { Less, Equal, Greater, Incomparable, Indeterminate };

// Tree order: x <= y exactly when the disk of x sits inside the disk of y.
// Type IV points are compared as far as their prefixes decide.
PartialOrder compare_points(const BerkPoint& x, const BerkPoint& y);

enum class PointClass { TypeI, TypeII, TypeIV, WouldBeTypeIII, Undetermined };

enum class NestDeclaration {
  EmptyIntersection,  // the nest misses every disc point
  IrrationalCut       // formal marker: radii cut at a value outside p^Q
};

struct ClassifyResult {
  PointClass kind = PointClass::Undetermined;
  std::optional<BerkPoint> point;  // populated for types I, II and IV
};

/**
 * Nested-disk classification.  A prefix that stabilizes (repeats its last
 * disk) names a type II point; a final radius of zero names a type I
 * point; a strictly decreasing prefix is a type IV point when its
 * intersection is declared empty, a formal would-be-type-III marker when
 * an irrational cut is declared, and otherwise undetermined.  Over the
 * value group p^Q no representable data ever produces a type III point,
 * so that class is only reachable through the explicit declaration.
 */
ClassifyResult classify(const std::vector<Disk>& prefix, std::optional<NestDeclaration> marker);

}  // namespace unicover::disc
