#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "unicover/cover.hpp"
#include "unicover/rat.hpp"

namespace unicover {

/**
 * Region algebra of all subsets of a finite carrier {0, .., n-1}.
 * Regions are bitsets; every operation is a word operation.
 */
class FiniteSetAlgebra {
 public:
  using Region = boost::dynamic_bitset<>;

  explicit FiniteSetAlgebra(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("finite carrier must be nonempty");
  }

  bool operator==(const FiniteSetAlgebra& o) const { return n_ == o.n_; }

  bool is_subset(const Region& u, const Region& v) const { return u.is_subset_of(v); }
  bool intersects(const Region& u, const Region& v) const { return u.intersects(v); }
  Region intersection(const Region& u, const Region& v) const { return u & v; }
  Region unite(const Region& u, const Region& v) const { return u | v; }
  Region complement(const Region& u) const { return ~u; }
  bool is_empty(const Region& u) const { return u.none(); }
  Region empty_region() const { return Region(n_); }
  Region carrier_region() const { return ~Region(n_); }

  std::size_t point_count() const { return n_; }
  Region point_region(std::size_t i) const {
    Region r(n_);
    r.set(i);
    return r;
  }

  std::size_t size() const { return n_; }

  Region region_of(const std::vector<std::size_t>& points) const {
    Region r(n_);
    for (auto i : points) {
      if (i >= n_) throw std::out_of_range("point outside carrier");
      r.set(i);
    }
    return r;
  }
  Region region_of(std::initializer_list<std::size_t> points) const {
    return region_of(std::vector<std::size_t>(points));
  }

  std::vector<std::size_t> points_of(const Region& r) const {
    std::vector<std::size_t> out;
    for (auto i = r.find_first(); i != Region::npos; i = r.find_next(i)) out.push_back(i);
    return out;
  }

 private:
  std::size_t n_;
};

using FiniteCover = Cover<FiniteSetAlgebra>;
using FiniteRegion = FiniteSetAlgebra::Region;

/**
 * A finite metric space with exact rational distances.  Only used to
 * realize the metric examples of the cover calculus: eps/3-ball covers
 * star-refine eps-ball covers, eps/2-ball covers delta-refine them.
 */
class FiniteMetric {
 public:
  explicit FiniteMetric(std::vector<std::vector<Rat>> dist) : dist_(std::move(dist)) {
    const std::size_t n = dist_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (dist_[i].size() != n) throw std::invalid_argument("metric: square matrix required");
      if (dist_[i][i] != 0) throw std::invalid_argument("metric: nonzero diagonal");
      for (std::size_t j = 0; j < n; ++j) {
        if (dist_[i][j] != dist_[j][i]) throw std::invalid_argument("metric: not symmetric");
        if (i != j && dist_[i][j] <= 0) throw std::invalid_argument("metric: nonpositive distance");
        for (std::size_t k = 0; k < n; ++k)
          if (dist_[i][j] > dist_[i][k] + dist_[k][j])
            throw std::invalid_argument("metric: triangle inequality fails");
      }
    }
  }

  std::size_t size() const { return dist_.size(); }
  const Rat& operator()(std::size_t i, std::size_t j) const { return dist_[i][j]; }

  // Open ball of rational radius around point i.
  FiniteRegion open_ball(const FiniteSetAlgebra& alg, std::size_t i, const Rat& eps) const {
    FiniteRegion r(size());
    for (std::size_t j = 0; j < size(); ++j)
      if (dist_[i][j] < eps) r.set(j);
    return r;
  }

  // The cover by all open balls of radius eps.
  FiniteCover ball_cover(const Rat& eps) const {
    FiniteSetAlgebra alg(size());
    std::vector<FiniteRegion> balls;
    balls.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) balls.push_back(open_ball(alg, i, eps));
    return FiniteCover(alg, std::move(balls));
  }

 private:
  std::vector<std::vector<Rat>> dist_;
};

}  // namespace unicover
