#pragma once

#include <optional>
#include <vector>

#include "unicover/disc/disk.hpp"

namespace unicover::disc {

/**
 * A disk carrying its boundary flag: the open or closed disk with the
 * given center and radius.  An open disk of radius zero is empty.
 */
struct DiskRegion {
  Disk disk;
  bool closed = true;

  long prime() const { return disk.prime(); }
  bool is_empty() const { return !closed && disk.radius().is_zero(); }

  static DiskRegion unit_disc(long prime) { return {Disk(Rat(0), AbsValue::one(prime)), true}; }
};

// Set containment with boundary flags resolved by the ultrametric:
//   closed in closed:  r' <= r  and  |a-a'| <= r
//   closed in open:    r' <  r  and  |a-a'| <  r
//   open   in closed:  r' <= r  and  |a-a'| <= r
//   open   in open:    r' <= r  and  |a-a'| <  r
// (an empty inner disk is contained in everything).
bool disk_contains(const DiskRegion& outer, const DiskRegion& inner);

// Two nonempty disks intersect exactly when one contains the other.
bool disk_intersects(const DiskRegion& a, const DiskRegion& b);

// Membership of a point given by its closed disk (radius zero for type I):
// max(|b - a|, s) compared against r, strictly for open disks.
bool disk_contains_point(const DiskRegion& d, const Disk& point_disk);

/**
 * One cell of the disc model: a positive disk minus finitely many holes.
 * Normalization drops holes missing the positive disk, absorbs nested
 * holes, and detects emptiness, which by the ultrametric happens exactly
 * when a single hole swallows the positive disk.
 */
class Cell {
 public:
  Cell(DiskRegion positive, std::vector<DiskRegion> holes);

  const DiskRegion& positive() const { return positive_; }
  const std::vector<DiskRegion>& holes() const { return holes_; }
  bool is_empty() const { return empty_; }
  long prime() const { return positive_.prime(); }

  bool contains_point(const Disk& point_disk) const;

  // A type I or II point of the cell, when one exists: the top of the
  // positive disk for closed cells, a collar point above every hole for
  // open ones.
  std::optional<BerkPoint> witness() const;

 private:
  DiskRegion positive_;
  std::vector<DiskRegion> holes_;
  bool empty_ = false;
};

std::optional<Cell> cell_intersection(const Cell& a, const Cell& b);

/**
 * A finite union of cells over the closed unit disc: the region class the
 * Laurent calculus works in.  Closed under union, intersection and
 * complement; extensional questions (emptiness, subset, equality) are all
 * decided exactly.
 */
class RegionUnion {
 public:
  explicit RegionUnion(long prime) : prime_(prime) {}
  RegionUnion(long prime, std::vector<Cell> cells);

  static RegionUnion empty(long prime) { return RegionUnion(prime); }
  static RegionUnion whole_disc(long prime) {
    return RegionUnion(prime, {Cell(DiskRegion::unit_disc(prime), {})});
  }
  static RegionUnion single_disk(DiskRegion d) {
    return RegionUnion(d.prime(), {Cell(std::move(d), {})});
  }

  long prime() const { return prime_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool is_empty() const { return cells_.empty(); }

  bool contains(const BerkPoint& x) const;  // kinds I and II
  std::optional<BerkPoint> witness() const;

 private:
  long prime_;
  std::vector<Cell> cells_;  // nonempty, pairwise non-absorbed
};

RegionUnion region_union(const RegionUnion& a, const RegionUnion& b);
RegionUnion region_intersection(const RegionUnion& a, const RegionUnion& b);
RegionUnion region_complement(const RegionUnion& a);
bool region_subset(const RegionUnion& a, const RegionUnion& b);
bool region_equal(const RegionUnion& a, const RegionUnion& b);

/**
 * Region-algebra facade over the cell calculus, making the generic cover
 * machinery available on the disc (stars, refinements, intersections).
 * Points are not enumerable here, so the delta operations stay finite-
 * carrier only.
 */
class DiscCellAlgebra {
 public:
  using Region = RegionUnion;

  explicit DiscCellAlgebra(long prime) : prime_(prime) {}
  bool operator==(const DiscCellAlgebra& o) const { return prime_ == o.prime_; }

  long prime() const { return prime_; }
  bool is_subset(const Region& u, const Region& v) const { return region_subset(u, v); }
  bool intersects(const Region& u, const Region& v) const { return !region_intersection(u, v).is_empty(); }
  Region intersection(const Region& u, const Region& v) const { return region_intersection(u, v); }
  Region unite(const Region& u, const Region& v) const { return region_union(u, v); }
  Region complement(const Region& u) const { return region_complement(u); }
  bool is_empty(const Region& u) const { return u.is_empty(); }
  Region empty_region() const { return RegionUnion::empty(prime_); }
  Region carrier_region() const { return RegionUnion::whole_disc(prime_); }

 private:
  long prime_;
};

}  // namespace unicover::disc
