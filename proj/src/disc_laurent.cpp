#include "unicover/disc/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace unicover::disc {

namespace {

bool compare_value(const AbsValue& value, ConstraintOp op, const AbsValue& bound) {
  switch (op) {
    case ConstraintOp::LT: return value < bound;
    case ConstraintOp::LE: return value <= bound;
    case ConstraintOp::GT: return value > bound;
    case ConstraintOp::GE: return value >= bound;
  }
  return false;
}

Ternary constraint_at_type4(const Constraint& c, const BerkPoint& x) {
  if (auto value = try_seminorm(c.poly, x)) {
    return compare_value(*value, c.op, c.bound) ? Ternary::True : Ternary::False;
  }
  // The exact value is below the deepest stored prefix value and above
  // nothing in particular; decide what that upper bound already decides.
  AbsValue ub = seminorm_upper_bound(c.poly, x);
  switch (c.op) {
    case ConstraintOp::LT:
      if (ub < c.bound) return Ternary::True;
      break;
    case ConstraintOp::LE:
      if (ub <= c.bound) return Ternary::True;
      break;
    case ConstraintOp::GT:
      if (ub <= c.bound) return Ternary::False;
      break;
    case ConstraintOp::GE:
      if (ub < c.bound) return Ternary::False;
      break;
  }
  return Ternary::Indeterminate;
}

}  // namespace

Ternary member(const LaurentDomain& u, const BerkPoint& x) {
  if (x.prime() != u.prime()) throw std::invalid_argument("member: prime mismatch");
  bool indeterminate = false;
  for (const auto& c : u.constraints()) {
    if (x.kind() != BerkPoint::Kind::IV) {
      if (!compare_value(seminorm(c.poly, x), c.op, c.bound)) return Ternary::False;
      continue;
    }
    switch (constraint_at_type4(c, x)) {
      case Ternary::False: return Ternary::False;
      case Ternary::Indeterminate: indeterminate = true; break;
      case Ternary::True: break;
    }
  }
  return indeterminate ? Ternary::Indeterminate : Ternary::True;
}

namespace {

// Exponent profile of the Gauss norm of f along the branch of one root:
// e(q) = v(lead) + sum_j m_j * min(d_j, q), with d_j the distance
// exponents to the other roots and the root's own multiplicity riding the
// q term.  Strictly increasing, slope at least the root's multiplicity.
// Returns the unique q with e(q) = target.
Rat crossing_exponent(const Rat& v_lead, std::vector<std::pair<Rat, long>> finite_dists, long self_mult,
                      const Rat& target) {
  std::sort(finite_dists.begin(), finite_dists.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge equal breakpoints
  std::vector<std::pair<Rat, long>> merged;
  for (auto& [d, m] : finite_dists) {
    if (!merged.empty() && merged.back().first == d)
      merged.back().second += m;
    else
      merged.emplace_back(d, m);
  }

  auto eval = [&](const Rat& q) {
    Rat e = v_lead + Rat(self_mult) * q;
    for (const auto& [d, m] : merged) e += Rat(m) * std::min(d, q);
    return e;
  };

  long total = self_mult;
  for (const auto& [d, m] : merged) total += m;

  if (merged.empty()) return (target - v_lead) / self_mult;

  if (Rat e0 = eval(merged.front().first); target <= e0)
    return merged.front().first - (e0 - target) / total;

  for (std::size_t t = 1; t < merged.size(); ++t) {
    Rat et = eval(merged[t].first);
    if (target <= et) {
      long slope = self_mult;
      for (std::size_t j = t; j < merged.size(); ++j) slope += merged[j].second;
      return merged[t].first - (et - target) / slope;
    }
  }
  return merged.back().first + (target - eval(merged.back().first)) / self_mult;
}

// The sub-level set {|f| <= a} (closed) or {|f| < a} (open) as root-
// centered disks.  Exact: along each root's branch the profile is
// strictly increasing, so the level crossing cuts a single disk, and any
// point of the sub-level set retracts into the disk of its nearest root.
std::vector<DiskRegion> sublevel_disks(const FactoredPoly& f, const AbsValue& bound, bool closed) {
  const long p = bound.prime();
  const Rat target = bound.exponent();
  const Rat v_lead = Rat(padic_valuation(f.lead(), p));
  std::vector<DiskRegion> disks;
  for (const auto& [root, mult] : f.roots()) {
    std::vector<std::pair<Rat, long>> dists;
    long self_mult = mult;
    for (const auto& [other, m] : f.roots()) {
      if (other == root) continue;
      dists.emplace_back(Rat(padic_valuation(root - other, p)), m);
    }
    Rat q = crossing_exponent(v_lead, std::move(dists), self_mult, target);
    disks.push_back(DiskRegion{Disk(root, AbsValue(p, q)), closed});
  }
  return disks;
}

RegionUnion constraint_region(long p, const Constraint& c) {
  if (c.poly.roots().empty()) {
    // constant polynomial: the constraint is all-or-nothing
    AbsValue value = abs_or_zero(c.poly.lead(), p);
    return compare_value(value, c.op, c.bound) ? RegionUnion::whole_disc(p) : RegionUnion::empty(p);
  }
  if (op_is_upper(c.op)) {
    std::vector<Cell> cells;
    for (auto& d : sublevel_disks(c.poly, c.bound, c.op == ConstraintOp::LE)) cells.emplace_back(d, std::vector<DiskRegion>{});
    return RegionUnion(p, std::move(cells));
  }
  // |g| > b is the complement of {|g| <= b}; |g| >= b that of {|g| < b}.
  std::vector<DiskRegion> holes = sublevel_disks(c.poly, c.bound, c.op == ConstraintOp::GT);
  return RegionUnion(p, {Cell(DiskRegion::unit_disc(p), std::move(holes))});
}

// Cross-validation points for a converted domain: tops of all cells and
// constraint disks, the constraint roots inside the disc, and the whole
// disc's top.
std::vector<BerkPoint> conversion_probes(const LaurentDomain& u, const RegionUnion& region) {
  std::vector<BerkPoint> probes;
  const long p = u.prime();
  probes.push_back(BerkPoint::gauss(p));
  auto add_disk = [&](const Disk& d) {
    if (!d.inside_unit_disc()) return;
    if (d.radius().is_zero())
      probes.push_back(BerkPoint::type1(p, d.center()));
    else
      probes.push_back(BerkPoint::type2(d));
  };
  for (const auto& cell : region.cells()) {
    add_disk(cell.positive().disk);
    for (const auto& h : cell.holes()) add_disk(h.disk);
    if (auto w = cell.witness()) probes.push_back(*w);
  }
  for (const auto& c : u.constraints())
    for (const auto& [root, mult] : c.poly.roots()) {
      if (abs_or_zero(root, p) <= AbsValue::one(p)) probes.push_back(BerkPoint::type1(p, root));
    }
  return probes;
}

}  // namespace

RegionUnion to_region(const LaurentDomain& u) {
  const long p = u.prime();
  RegionUnion region = RegionUnion::whole_disc(p);
  bool multi_root = false;
  for (const auto& c : u.constraints()) {
    if (c.poly.roots().size() > 1) multi_root = true;
    region = region_intersection(region, constraint_region(p, c));
  }
  if (multi_root) {
    // The per-root split of a multi-root constraint is validated against
    // the seminorm itself on the critical points of the conversion.
    for (const auto& x : conversion_probes(u, region)) {
      bool direct = member(u, x) == Ternary::True;
      if (direct != region.contains(x))
        throw std::logic_error("to_region: constraint not disk-decomposable at a critical point");
    }
  }
  return region;
}

bool emptiness(const RegionUnion& r) { return r.is_empty(); }

std::optional<BerkPoint> covers_disc_witness(const std::vector<LaurentDomain>& domains) {
  if (domains.empty()) throw std::invalid_argument("covers_disc: empty domain list");
  const long p = domains.front().prime();
  RegionUnion uncovered = RegionUnion::whole_disc(p);
  for (const auto& d : domains) {
    if (d.prime() != p) throw std::invalid_argument("covers_disc: prime mismatch");
    uncovered = region_intersection(uncovered, region_complement(to_region(d)));
    if (uncovered.is_empty()) return std::nullopt;
  }
  return uncovered.witness();
}

bool covers_disc(const std::vector<LaurentDomain>& domains) { return !covers_disc_witness(domains); }

MaxModResult maximum_modulus(const FactoredPoly& f, const RegionUnion& region) {
  if (region.is_empty()) throw std::invalid_argument("maximum_modulus: empty region");
  const long p = region.prime();
  for (const auto& cell : region.cells()) {
    if (!cell.positive().closed) throw std::invalid_argument("maximum_modulus: closed regions only");
    for (const auto& h : cell.holes())
      if (h.closed) throw std::invalid_argument("maximum_modulus: closed regions only");
  }

  std::vector<BerkPoint> candidates;
  auto point_of = [&](const Disk& d) {
    return d.radius().is_zero() ? BerkPoint::type1(p, d.center()) : BerkPoint::type2(d);
  };
  for (const auto& cell : region.cells()) {
    candidates.push_back(point_of(cell.positive().disk));
    for (const auto& [root, mult] : f.roots()) {
      if (!disk_contains_point(cell.positive(), Disk::point(p, root))) continue;
      // climb out of every hole that hides the root
      AbsValue exit_radius = AbsValue::zero(p);
      for (const auto& h : cell.holes())
        if (disk_contains_point(h, Disk::point(p, root))) exit_radius = std::max(exit_radius, h.disk.radius());
      candidates.push_back(point_of(Disk(root, exit_radius)));
    }
  }

  std::optional<MaxModResult> best;
  for (const auto& x : candidates) {
    if (!region.contains(x)) continue;  // a root may sit in another cell's hole
    AbsValue value = seminorm(f, x);
    if (!best) {
      best = MaxModResult{value, value, x, x};
      continue;
    }
    if (value < best->min) {
      best->min = value;
      best->argmin = x;
    }
    if (value > best->max) {
      best->max = value;
      best->argmax = x;
    }
  }
  // Every cell top belongs to its cell, so candidates never all vanish.
  if (!best) throw std::logic_error("maximum_modulus: no candidate point survived");
  return *best;
}

ShrinkResult shrink_cover_traced(const std::vector<LaurentDomain>& domains) {
  if (domains.empty()) throw std::invalid_argument("shrink_cover: empty domain list");
  const long p = domains.front().prime();
  for (const auto& d : domains) {
    if (d.prime() != p) throw std::invalid_argument("shrink_cover: prime mismatch");
    if (!d.is_open()) throw std::invalid_argument("shrink_cover: open-form domains required");
  }
  if (auto witness = covers_disc_witness(domains)) throw not_a_cover_error("not a cover", *witness);

  std::vector<LaurentDomain> current = domains;
  ShrinkResult result;

  for (std::size_t i = 0; i < current.size(); ++i) {
    ShrinkStep step;
    step.index = i;
    step.beta_exponent = 1;  // trial tightening by p^-1

    auto uncovered_with = [&](const LaurentDomain& candidate) {
      RegionUnion z = region_complement(to_region(candidate));
      for (std::size_t j = 0; j < current.size() && !z.is_empty(); ++j) {
        if (j == i) continue;
        z = region_intersection(z, region_complement(to_region(current[j])));
      }
      return z;
    };

    LaurentDomain trial = current[i].tightened(step.beta_exponent);
    RegionUnion z_beta = uncovered_with(trial);
    step.z_beta_empty = z_beta.is_empty();
    if (step.z_beta_empty) {
      step.gamma_exponent = step.beta_exponent;
      current[i] = std::move(trial);
      result.steps.push_back(std::move(step));
      continue;
    }

    // Worst constraint margin of the current domain over the closed
    // region Z: positive because Z avoids the other domains and so sits
    // strictly inside this one.
    std::optional<Rat> margin;
    for (const auto& c : current[i].constraints()) {
      MaxModResult mm = maximum_modulus(c.poly, z_beta);
      Rat m;
      if (op_is_upper(c.op)) {
        if (mm.max.is_zero()) throw std::logic_error("shrink_cover: constraint vanished on Z");
        m = mm.max.exponent() - c.bound.exponent();
      } else {
        if (mm.min.is_zero())
          throw std::logic_error("shrink_cover: lower-bounded polynomial has a zero on Z");
        m = c.bound.exponent() - mm.min.exponent();
      }
      if (m <= 0) throw std::logic_error("shrink_cover: nonpositive margin; cover precondition violated");
      if (!margin || m < *margin) margin = m;
    }
    if (!margin) throw std::logic_error("shrink_cover: unconstrained domain left Z nonempty");
    step.margin_exponent = *margin;

    // gamma strictly between the worst attained ratio and 1: the midpoint
    // pick in exponent space.
    AbsValue eps(p, *margin);
    step.gamma_exponent = strictly_between(eps, AbsValue::one(p)).exponent();
    current[i] = current[i].tightened(step.gamma_exponent);

    if (!uncovered_with(current[i]).is_empty())
      throw std::logic_error("shrink_cover: tightening failed to preserve coverage");
    result.steps.push_back(std::move(step));
  }

  result.closed.reserve(current.size());
  for (const auto& d : current) result.closed.push_back(d.closure());

  // Postconditions: the closed list still covers and precisely refines
  // the input.
  if (auto witness = covers_disc_witness(result.closed))
    throw std::logic_error("shrink_cover: closed output does not cover");
  for (std::size_t i = 0; i < domains.size(); ++i)
    if (!region_subset(to_region(result.closed[i]), to_region(domains[i])))
      throw std::logic_error("shrink_cover: output is not a precise refinement");
  return result;
}

std::vector<LaurentDomain> shrink_cover(const std::vector<LaurentDomain>& domains) {
  return shrink_cover_traced(domains).closed;
}

namespace {

// A value-group element strictly between zero and v.
AbsValue value_below(const AbsValue& v) { return AbsValue(v.prime(), v.exponent() + 1); }

AbsValue between_values(const AbsValue& lo, const AbsValue& hi) {
  return lo.is_zero() ? value_below(hi) : strictly_between(lo, hi);
}

}  // namespace

std::pair<LaurentDomain, LaurentDomain> separating_pair(const BerkPoint& x, const BerkPoint& y) {
  if (x.prime() != y.prime()) throw std::invalid_argument("separating_pair: prime mismatch");
  if (x.kind() == BerkPoint::Kind::IV || y.kind() == BerkPoint::Kind::IV)
    throw std::invalid_argument("separating_pair: kinds I and II only");
  if (compare_points(x, y) == PartialOrder::Equal) throw std::invalid_argument("separating_pair: equal points");

  const long p = x.prime();
  const Disk& dx = x.disk();
  const Disk& dy = y.disk();

  // |T - a| tells the two points apart unless they share its value, in
  // which case the smaller disk's center works from the other side.
  FactoredPoly t_minus_a = FactoredPoly::linear(dx.center());
  AbsValue at_x = dx.radius();
  AbsValue at_y = std::max(abs_diff(dy.center(), dx.center(), p), dy.radius());

  if (at_x == at_y) {
    t_minus_a = FactoredPoly::linear(dy.center());
    at_x = std::max(abs_diff(dx.center(), dy.center(), p), dx.radius());
    at_y = dy.radius();
  }

  AbsValue mid = between_values(std::min(at_x, at_y), std::max(at_x, at_y));
  LaurentDomain below(p, {Constraint(t_minus_a, mid, ConstraintOp::LT)});
  LaurentDomain above(p, {Constraint(t_minus_a, mid, ConstraintOp::GT)});
  if (at_x < at_y) return {std::move(below), std::move(above)};
  return {std::move(above), std::move(below)};
}

std::optional<Rat> rigid_point_in(const LaurentDomain& u, const BerkPoint& hint) {
  const long p = u.prime();
  std::vector<Rat> bases;
  auto push_base = [&](const Rat& r) {
    if (std::find(bases.begin(), bases.end(), r) == bases.end()) bases.push_back(r);
  };
  if (hint.kind() == BerkPoint::Kind::IV)
    push_base(hint.deepest().center());
  else
    push_base(hint.disk().center());
  for (const auto& c : u.constraints())
    for (const auto& [root, mult] : c.poly.roots()) push_base(root);

  // integer exponent range informed by the data in play
  long k_hi = 2;
  auto widen = [&](const Rat& q) {
    Rat a = q > 0 ? q : -q;
    long ceil_q = static_cast<long>(mpz_class(a.get_num() / a.get_den()).get_si()) + 1;
    k_hi = std::max(k_hi, ceil_q + 2);
  };
  for (const auto& c : u.constraints()) widen(c.bound.exponent());
  if (hint.kind() != BerkPoint::Kind::IV && !hint.disk().radius().is_zero())
    widen(hint.disk().radius().exponent());

  auto try_point = [&](const Rat& cand) -> bool {
    if (!(abs_or_zero(cand, p) <= AbsValue::one(p))) return false;
    return member(u, BerkPoint::type1(p, cand)) == Ternary::True;
  };

  for (const auto& base : bases)
    if (try_point(base)) return base;
  for (long k = 0; k <= k_hi; ++k) {
    Rat step(1);
    for (long t = 0; t < k; ++t) step *= p;  // the rational p^k has |.|_p = p^-k
    for (long c = 1; c <= 3; ++c) {
      if (c % p == 0) continue;
      for (const auto& base : bases) {
        Rat cand = base + Rat(c) * step;
        if (try_point(cand)) return cand;
        cand = base - Rat(c) * step;
        if (try_point(cand)) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace unicover::disc
