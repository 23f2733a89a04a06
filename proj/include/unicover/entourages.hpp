#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "unicover/axioms.hpp"
#include "unicover/finite.hpp"

namespace unicover {

/**
 * A subset of carrier x carrier over a finite carrier, stored row-major.
 * Collections of entourages are kept as finite bases of the entourage
 * filter; superset closure stays implicit, mirroring cover bases.
 */
class Entourage {
 public:
  explicit Entourage(std::size_t n) : n_(n), pairs_(n * n) {}

  static Entourage diagonal(std::size_t n) {
    Entourage e(n);
    for (std::size_t i = 0; i < n; ++i) e.set(i, i);
    return e;
  }
  static Entourage full(std::size_t n) {
    Entourage e(n);
    e.pairs_.set();
    return e;
  }

  std::size_t carrier_size() const { return n_; }
  bool test(std::size_t x, std::size_t y) const { return pairs_.test(x * n_ + y); }
  void set(std::size_t x, std::size_t y) { pairs_.set(x * n_ + y); }

  bool contains_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!test(i, i)) return false;
    return true;
  }

  Entourage transpose() const {
    Entourage e(n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (test(x, y)) e.set(y, x);
    return e;
  }

  // Relational composition: (x, y) when some z links x to z and z to y.
  Entourage compose(const Entourage& o) const {
    Entourage e(n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t z = 0; z < n_; ++z)
        if (test(x, z))
          for (std::size_t y = 0; y < n_; ++y)
            if (o.test(z, y)) e.set(x, y);
    return e;
  }

  // The section U[x] = { y : (x, y) in U }.
  FiniteRegion section(std::size_t x) const {
    FiniteRegion r(n_);
    for (std::size_t y = 0; y < n_; ++y)
      if (test(x, y)) r.set(y);
    return r;
  }

  bool is_subset_of(const Entourage& o) const { return pairs_.is_subset_of(o.pairs_); }
  Entourage operator&(const Entourage& o) const {
    Entourage e(n_);
    e.pairs_ = pairs_ & o.pairs_;
    return e;
  }
  bool operator==(const Entourage& o) const { return n_ == o.n_ && pairs_ == o.pairs_; }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto i = pairs_.find_first(); i != boost::dynamic_bitset<>::npos; i = pairs_.find_next(i))
      out.emplace_back(i / n_, i % n_);
    return out;
  }

 private:
  std::size_t n_;
  boost::dynamic_bitset<> pairs_;
};

struct EntourageReport {
  CheckItem e1;      // each member contains the diagonal
  CheckItem e2;      // transposes stay in the generated filter
  CheckItem e3;      // half-size composition witnesses
  CheckItem filter;  // pairwise intersections contain a member
  bool all_hold() const { return e1.holds && e2.holds && e3.holds && filter.holds; }
};

EntourageReport check_entourage_axioms(const std::vector<Entourage>& base);

// The entourage base induced by a cover base: one entourage per cover,
// the union of V x V over the cover's members.
std::vector<Entourage> covers_to_entourages(const CoverBase& base);

/**
 * The uniformity decision procedure induced by an entourage base: a cover
 * C is uniform when some entourage U puts every section U[x] inside a
 * member of C.
 */
class EntourageUniformity {
 public:
  explicit EntourageUniformity(std::vector<Entourage> base) : base_(std::move(base)) {}

  bool operator()(const FiniteCover& c) const {
    for (const auto& u : base_) {
      bool ok = true;
      for (std::size_t x = 0; x < u.carrier_size() && ok; ++x) {
        FiniteRegion sec = u.section(x);
        bool inside = false;
        for (const auto& v : c.regions())
          if (sec.is_subset_of(v)) {
            inside = true;
            break;
          }
        ok = inside;
      }
      if (ok) return true;
    }
    return false;
  }

  const std::vector<Entourage>& base() const { return base_; }

 private:
  std::vector<Entourage> base_;
};

inline EntourageUniformity entourages_to_covers(std::vector<Entourage> base) {
  return EntourageUniformity(std::move(base));
}

}  // namespace unicover
