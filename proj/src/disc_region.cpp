#include "unicover/disc/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace unicover::disc {

bool disk_contains(const DiskRegion& outer, const DiskRegion& inner) {
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  const long p = outer.prime();
  AbsValue dist = abs_diff(outer.disk.center(), inner.disk.center(), p);
  const AbsValue& r = outer.disk.radius();
  const AbsValue& ri = inner.disk.radius();
  if (outer.closed) return ri <= r && dist <= r;
  if (inner.closed) return ri < r && dist < r;
  return ri <= r && dist < r;
}

bool disk_intersects(const DiskRegion& a, const DiskRegion& b) {
  if (a.is_empty() || b.is_empty()) return false;
  return disk_contains(a, b) || disk_contains(b, a);
}

bool disk_contains_point(const DiskRegion& d, const Disk& point_disk) {
  return disk_contains(d, DiskRegion{point_disk, true});
}

Cell::Cell(DiskRegion positive, std::vector<DiskRegion> holes) : positive_(std::move(positive)) {
  const long p = positive_.prime();
  const DiskRegion carrier = DiskRegion::unit_disc(p);

  // Clip the positive disk to the carrier; ultrametrically the two either
  // nest or miss each other.
  if (positive_.is_empty()) {
    empty_ = true;
    return;
  }
  if (disk_contains(positive_, carrier)) {
    positive_ = carrier;
  } else if (!disk_contains(carrier, positive_)) {
    empty_ = true;
    return;
  }

  for (auto& h : holes) {
    if (h.prime() != p) throw std::invalid_argument("cell: prime mismatch");
    if (h.is_empty() || !disk_intersects(h, positive_)) continue;
    if (disk_contains(h, positive_)) {  // one hole swallows everything
      empty_ = true;
      holes_.clear();
      return;
    }
    holes_.push_back(h);
  }
  // keep only maximal holes
  std::vector<DiskRegion> maximal;
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < holes_.size() && !absorbed; ++j) {
      if (i == j) continue;
      if (disk_contains(holes_[j], holes_[i]) && !(j > i && disk_contains(holes_[i], holes_[j])))
        absorbed = true;
    }
    if (!absorbed) maximal.push_back(holes_[i]);
  }
  holes_ = std::move(maximal);
}

bool Cell::contains_point(const Disk& point_disk) const {
  if (empty_) return false;
  if (!disk_contains_point(positive_, point_disk)) return false;
  for (const auto& h : holes_)
    if (disk_contains_point(h, point_disk)) return false;
  return true;
}

std::optional<BerkPoint> Cell::witness() const {
  if (empty_) return std::nullopt;
  const long p = prime();
  if (positive_.closed) {
    // The top of a closed positive disk survives every proper hole.
    if (positive_.disk.radius().is_zero()) return BerkPoint::type1(p, positive_.disk.center());
    return BerkPoint::type2(positive_.disk);
  }
  if (holes_.empty()) return BerkPoint::type1(p, positive_.disk.center());
  // A collar radius above every hole and below the open boundary.
  const Rat q_pos = positive_.disk.radius().exponent();
  std::optional<Rat> q_hole;  // smallest exponent = largest hole radius
  for (const auto& h : holes_) {
    if (h.disk.radius().is_zero()) continue;
    Rat q = h.disk.radius().exponent();
    if (!q_hole || q < *q_hole) q_hole = q;
  }
  Rat q_mid = q_hole ? Rat((q_pos + *q_hole) / 2) : Rat(q_pos + 1);
  return BerkPoint::type2(Disk(positive_.disk.center(), AbsValue(p, q_mid)));
}

std::optional<Cell> cell_intersection(const Cell& a, const Cell& b) {
  if (a.is_empty() || b.is_empty()) return std::nullopt;
  DiskRegion positive = a.positive();
  if (disk_contains(a.positive(), b.positive()))
    positive = b.positive();
  else if (!disk_contains(b.positive(), a.positive()))
    return std::nullopt;  // positives miss each other
  std::vector<DiskRegion> holes = a.holes();
  holes.insert(holes.end(), b.holes().begin(), b.holes().end());
  Cell cell(std::move(positive), std::move(holes));
  if (cell.is_empty()) return std::nullopt;
  return cell;
}

namespace {

// Complement of one cell: outside the positive disk, or inside a hole.
std::vector<Cell> cell_complement_parts(const Cell& c) {
  std::vector<Cell> parts;
  const long p = c.prime();
  Cell outside(DiskRegion::unit_disc(p), {c.positive()});
  if (!outside.is_empty()) parts.push_back(std::move(outside));
  for (const auto& h : c.holes()) {
    Cell inside(h, {});
    if (!inside.is_empty()) parts.push_back(std::move(inside));
  }
  return parts;
}

bool cell_subset(const Cell& a, const Cell& b) {
  for (const auto& part : cell_complement_parts(b))
    if (cell_intersection(a, part)) return false;
  return true;
}

}  // namespace

RegionUnion::RegionUnion(long prime, std::vector<Cell> cells) : prime_(prime) {
  for (auto& c : cells) {
    if (c.prime() != prime_) throw std::invalid_argument("region: prime mismatch");
    if (!c.is_empty()) cells_.push_back(std::move(c));
  }
  // absorb cells contained in other cells
  std::vector<Cell> kept;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < cells_.size() && !absorbed; ++j) {
      if (i == j) continue;
      if (cell_subset(cells_[i], cells_[j]) && !(j > i && cell_subset(cells_[j], cells_[i]))) absorbed = true;
    }
    if (!absorbed) kept.push_back(cells_[i]);
  }
  cells_ = std::move(kept);
}

bool RegionUnion::contains(const BerkPoint& x) const {
  if (x.kind() == BerkPoint::Kind::IV)
    throw std::domain_error("region membership is defined for kinds I and II");
  for (const auto& c : cells_)
    if (c.contains_point(x.disk())) return true;
  return false;
}

std::optional<BerkPoint> RegionUnion::witness() const {
  for (const auto& c : cells_)
    if (auto w = c.witness()) return w;
  return std::nullopt;
}

RegionUnion region_union(const RegionUnion& a, const RegionUnion& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("region: prime mismatch");
  std::vector<Cell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return RegionUnion(a.prime(), std::move(cells));
}

RegionUnion region_intersection(const RegionUnion& a, const RegionUnion& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("region: prime mismatch");
  std::vector<Cell> cells;
  for (const auto& ca : a.cells())
    for (const auto& cb : b.cells())
      if (auto meet = cell_intersection(ca, cb)) cells.push_back(std::move(*meet));
  return RegionUnion(a.prime(), std::move(cells));
}

RegionUnion region_complement(const RegionUnion& a) {
  RegionUnion out = RegionUnion::whole_disc(a.prime());
  for (const auto& c : a.cells()) {
    RegionUnion parts(a.prime(), cell_complement_parts(c));
    out = region_intersection(out, parts);
    if (out.is_empty()) break;
  }
  return out;
}

bool region_subset(const RegionUnion& a, const RegionUnion& b) {
  return region_intersection(a, region_complement(b)).is_empty();
}

bool region_equal(const RegionUnion& a, const RegionUnion& b) {
  return region_subset(a, b) && region_subset(b, a);
}

}  // namespace unicover::disc
