#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unicover {

/**
 * A region algebra supplies the set operations the cover calculus needs
 * from a carrier: subset, intersection, union, complement and emptiness.
 * Regions must be closed under finite union and complement (complements
 * may be represented as finite unions).  Two algebra values compare equal
 * exactly when they describe the same carrier.
 */
template <typename A>
concept RegionAlgebra = std::equality_comparable<A> && requires(const A& alg, const typename A::Region& u,
                                                                const typename A::Region& v) {
  typename A::Region;
  { alg.is_subset(u, v) } -> std::convertible_to<bool>;
  { alg.intersects(u, v) } -> std::convertible_to<bool>;
  { alg.intersection(u, v) } -> std::same_as<typename A::Region>;
  { alg.unite(u, v) } -> std::same_as<typename A::Region>;
  { alg.complement(u) } -> std::same_as<typename A::Region>;
  { alg.is_empty(u) } -> std::convertible_to<bool>;
  { alg.empty_region() } -> std::same_as<typename A::Region>;
  { alg.carrier_region() } -> std::same_as<typename A::Region>;
};

// Finite carriers additionally enumerate their points, one region per point.
template <typename A>
concept PointEnumerable = RegionAlgebra<A> && requires(const A& alg, std::size_t i) {
  { alg.point_count() } -> std::convertible_to<std::size_t>;
  { alg.point_region(i) } -> std::same_as<typename A::Region>;
};

template <RegionAlgebra A>
bool region_equal(const A& alg, const typename A::Region& u, const typename A::Region& v) {
  return alg.is_subset(u, v) && alg.is_subset(v, u);
}

/**
 * A finite cover of the carrier: a nonempty list of regions whose union is
 * the whole carrier.  Construction normalizes: empty members are dropped
 * and extensional duplicates merged (first occurrence kept, order
 * preserved otherwise).  Covering is checked through emptiness of the
 * intersection of complements, so the same code serves carriers with no
 * point enumeration.
 */
template <RegionAlgebra A>
class Cover {
 public:
  using Region = typename A::Region;

  Cover(A alg, std::vector<Region> regions) : alg_(std::move(alg)) {
    for (auto& r : regions) {
      if (alg_.is_empty(r)) continue;
      bool dup = false;
      for (const auto& kept : regions_)
        if (region_equal(alg_, kept, r)) {
          dup = true;
          break;
        }
      if (!dup) regions_.push_back(std::move(r));
    }
    if (regions_.empty()) throw std::invalid_argument("cover: no nonempty regions");
    Region uncovered = alg_.complement(regions_[0]);
    for (std::size_t i = 1; i < regions_.size(); ++i)
      uncovered = alg_.intersection(uncovered, alg_.complement(regions_[i]));
    if (!alg_.is_empty(uncovered)) throw std::invalid_argument("cover: regions do not cover the carrier");
  }

  const A& alg() const { return alg_; }
  const std::vector<Region>& regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }
  const Region& operator[](std::size_t i) const { return regions_[i]; }

 private:
  A alg_;
  std::vector<Region> regions_;
};

namespace detail {
template <RegionAlgebra A>
void check_same_carrier(const Cover<A>& c, const Cover<A>& d) {
  if (!(c.alg() == d.alg())) throw std::invalid_argument("covers over different carriers");
}
}  // namespace detail

// C < D: every region of C sits inside some region of D.
template <RegionAlgebra A>
bool refines(const Cover<A>& c, const Cover<A>& d) {
  detail::check_same_carrier(c, d);
  for (const auto& u : c.regions()) {
    bool found = false;
    for (const auto& v : d.regions())
      if (c.alg().is_subset(u, v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Index-aligned refinement: |C| = |D| and C[i] inside D[i] for every i.
template <RegionAlgebra A>
bool precise_refines(const Cover<A>& c, const Cover<A>& d) {
  detail::check_same_carrier(c, d);
  if (c.size() != d.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c.alg().is_subset(c[i], d[i])) return false;
  return true;
}

// C and D meet in the cover of all nonempty pairwise intersections.
template <RegionAlgebra A>
Cover<A> intersection_cover(const Cover<A>& c, const Cover<A>& d) {
  detail::check_same_carrier(c, d);
  std::vector<typename A::Region> regions;
  regions.reserve(c.size() * d.size());
  for (const auto& u : c.regions())
    for (const auto& v : d.regions()) regions.push_back(c.alg().intersection(u, v));
  return Cover<A>(c.alg(), std::move(regions));
}

// B(H, C): union of the members of C meeting H.  Empty for empty H.
template <RegionAlgebra A>
typename A::Region star(const typename A::Region& h, const Cover<A>& c) {
  auto out = c.alg().empty_region();
  for (const auto& u : c.regions())
    if (c.alg().intersects(h, u)) out = c.alg().unite(out, u);
  return out;
}

// C* = { B(U, C) : U in C }.
template <RegionAlgebra A>
Cover<A> star_cover(const Cover<A>& c) {
  std::vector<typename A::Region> regions;
  regions.reserve(c.size());
  for (const auto& u : c.regions()) regions.push_back(star(u, c));
  return Cover<A>(c.alg(), std::move(regions));
}

// C^Delta = { B(x, C) : x in the carrier }.  Needs enumerable points.
template <PointEnumerable A>
Cover<A> delta_cover(const Cover<A>& c) {
  std::vector<typename A::Region> regions;
  regions.reserve(c.alg().point_count());
  for (std::size_t i = 0; i < c.alg().point_count(); ++i) regions.push_back(star(c.alg().point_region(i), c));
  return Cover<A>(c.alg(), std::move(regions));
}

template <RegionAlgebra A>
bool star_refines(const Cover<A>& c, const Cover<A>& d) {
  return refines(star_cover(c), d);
}

template <PointEnumerable A>
bool delta_refines(const Cover<A>& c, const Cover<A>& d) {
  return refines(delta_cover(c), d);
}

/**
 * The constructive half of the Shrinking Lemma.  Given a cover D =
 * {U_1..U_n} and a precise refinement {V_1..V_n} (itself a cover), the
 * intersection D' of the binary covers {U_i, complement(V_i)} always
 * delta-refines D: any ball B(x, D') with x in V_i consists of members
 * forced inside U_i, since no member containing x fits in complement(V_i).
 */
template <RegionAlgebra A>
Cover<A> shrink_to_delta_refinement(const Cover<A>& d, const Cover<A>& shrink) {
  detail::check_same_carrier(d, shrink);
  if (!precise_refines(shrink, d)) throw std::invalid_argument("invalid shrink: not a precise refinement");
  const A& alg = d.alg();
  std::vector<Cover<A>> binary;
  binary.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    binary.push_back(Cover<A>(alg, {d[i], alg.complement(shrink[i])}));
  Cover<A> result = binary[0];
  for (std::size_t i = 1; i < binary.size(); ++i) result = intersection_cover(result, binary[i]);
  return result;
}

// Extensional equality of covers as sets of regions.
template <RegionAlgebra A>
bool covers_equal(const Cover<A>& c, const Cover<A>& d) {
  detail::check_same_carrier(c, d);
  if (c.size() != d.size()) return false;
  for (const auto& u : c.regions()) {
    bool found = false;
    for (const auto& v : d.regions())
      if (region_equal(c.alg(), u, v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace unicover
