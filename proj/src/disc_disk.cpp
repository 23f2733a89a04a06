#include "unicover/disc/disk.hpp"

namespace unicover::disc {

namespace {

bool disjoint_closed(const Disk& a, const Disk& b) { return !a.contains(b) && !b.contains(a); }

// Compare a type IV point (through its prefix) with a disk point.
PartialOrder compare_nest_with_disk(const std::vector<Disk>& prefix, const Disk& d) {
  for (const auto& p : prefix) {
    if (d.contains(p)) return PartialOrder::Less;  // the nest sits below d for good
    if (disjoint_closed(p, d)) return PartialOrder::Incomparable;
  }
  // d stays strictly inside every stored disk: whether the nest eventually
  // dives into d or slides past it is not recorded.
  return PartialOrder::Indeterminate;
}

}  // namespace

PartialOrder compare_points(const BerkPoint& x, const BerkPoint& y) {
  if (x.prime() != y.prime()) throw std::invalid_argument("compare_points: prime mismatch");
  const bool x4 = x.kind() == BerkPoint::Kind::IV;
  const bool y4 = y.kind() == BerkPoint::Kind::IV;
  if (!x4 && !y4) {
    const bool le = y.disk().contains(x.disk());
    const bool ge = x.disk().contains(y.disk());
    if (le && ge) return PartialOrder::Equal;
    if (le) return PartialOrder::Less;
    if (ge) return PartialOrder::Greater;
    return PartialOrder::Incomparable;
  }
  if (x4 && !y4) return compare_nest_with_disk(x.prefix(), y.disk());
  if (!x4 && y4) {
    switch (compare_nest_with_disk(y.prefix(), x.disk())) {
      case PartialOrder::Less: return PartialOrder::Greater;
      case PartialOrder::Incomparable: return PartialOrder::Incomparable;
      default: return PartialOrder::Indeterminate;
    }
  }
  // Two nests: disjoint prefixes settle it, anything else is beyond the
  // stored data.
  for (const auto& a : x.prefix())
    for (const auto& b : y.prefix())
      if (disjoint_closed(a, b)) return PartialOrder::Incomparable;
  return PartialOrder::Indeterminate;
}

ClassifyResult classify(const std::vector<Disk>& prefix, std::optional<NestDeclaration> marker) {
  if (prefix.empty()) throw std::invalid_argument("classify: empty prefix");
  const long p = prefix.front().prime();
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    if (prefix[i].prime() != p) throw std::invalid_argument("classify: prime mismatch");
    if (!prefix[i].contains(prefix[i + 1])) throw std::invalid_argument("classify: prefix not nested");
  }

  const bool stabilized = prefix.size() >= 2 && prefix[prefix.size() - 1] == prefix[prefix.size() - 2];

  std::vector<Disk> strict;
  for (const auto& d : prefix)
    if (strict.empty() || !(strict.back() == d)) strict.push_back(d);

  ClassifyResult result;
  if (strict.back().radius().is_zero()) {
    result.kind = PointClass::TypeI;
    result.point = BerkPoint::type1(p, strict.back().center());
    return result;
  }
  if (stabilized) {
    if (marker) throw std::invalid_argument("classify: declaration contradicts a stabilized prefix");
    result.kind = PointClass::TypeII;
    result.point = BerkPoint::type2(strict.back());
    return result;
  }
  if (!marker) {
    result.kind = PointClass::Undetermined;
    return result;
  }
  if (*marker == NestDeclaration::IrrationalCut) {
    // Radii in this model always carry rational exponents, so an
    // irrational cut is a formal declaration with no representable point.
    result.kind = PointClass::WouldBeTypeIII;
    return result;
  }
  if (strict.size() < 2) throw std::invalid_argument("classify: declared-empty nest needs a strict decrease");
  result.kind = PointClass::TypeIV;
  result.point = BerkPoint::type4(strict);
  return result;
}

}  // namespace unicover::disc
