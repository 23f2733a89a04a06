#include "unicover/axioms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace unicover {

namespace {

std::string region_str(const FiniteSetAlgebra& alg, const FiniteRegion& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : alg.points_of(r)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string cover_str(const FiniteCover& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << region_str(c.alg(), c[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace

CoverBase::CoverBase(FiniteSetAlgebra alg, std::vector<FiniteCover> covers)
    : alg_(alg), covers_(std::move(covers)) {
  if (covers_.empty()) throw std::invalid_argument("cover base: empty");
  for (const auto& c : covers_)
    if (!(c.alg() == alg_)) throw std::invalid_argument("cover base: carrier mismatch");
}

bool is_uniform_cover(const FiniteCover& c, const CoverBase& base) {
  if (!(c.alg() == base.alg())) throw std::invalid_argument("is_uniform_cover: carrier mismatch");
  for (const auto& b : base.covers())
    if (refines(b, c)) return true;
  return false;
}

BaseReport check_base(const CoverBase& base) {
  BaseReport report;
  const auto& covers = base.covers();
  const std::size_t n = covers.size();

  // Star-refinement tables, reused by all five verdicts.
  std::vector<Cover<FiniteSetAlgebra>> stars, deltas;
  stars.reserve(n);
  deltas.reserve(n);
  for (const auto& c : covers) {
    stars.push_back(star_cover(c));
    deltas.push_back(delta_cover(c));
  }
  auto star_ref = [&](std::size_t i, std::size_t j) { return refines(stars[i], covers[j]); };
  auto delta_ref = [&](std::size_t i, std::size_t j) { return refines(deltas[i], covers[j]); };

  auto pair_check = [&](auto&& relation, CheckItem& item, const char* kind) {
    item.holds = true;
    for (std::size_t i = 0; i < n && item.holds; ++i)
      for (std::size_t j = i; j < n && item.holds; ++j) {
        std::optional<std::size_t> witness;
        for (std::size_t k = 0; k < n; ++k)
          if (relation(k, i) && relation(k, j)) {
            witness = k;
            break;
          }
        if (!witness) {
          item.holds = false;
          std::ostringstream os;
          os << "no common " << kind << "-refinement of covers " << i << " and " << j;
          item.detail = os.str();
        }
      }
    if (item.holds) item.detail = "every pair has a common " + std::string(kind) + "-refinement";
  };

  report.c2.axiom = "C2";
  pair_check(star_ref, report.c2, "star");
  report.c2_prime.axiom = "C2'";
  pair_check(delta_ref, report.c2_prime, "delta");

  report.c2a.axiom = "C2(a)";
  report.c2a.holds = true;
  for (std::size_t i = 0; i < n && report.c2a.holds; ++i)
    for (std::size_t j = i; j < n && report.c2a.holds; ++j) {
      FiniteCover meet = intersection_cover(covers[i], covers[j]);
      bool member = false;
      for (const auto& b : covers)
        if (covers_equal(meet, b)) {
          member = true;
          break;
        }
      if (!member) {
        report.c2a.holds = false;
        std::ostringstream os;
        os << "intersection of covers " << i << " and " << j << " = " << cover_str(meet) << " is not a member";
        report.c2a.detail = os.str();
      }
    }
  if (report.c2a.holds) report.c2a.detail = "closed under cover intersection";

  auto single_check = [&](auto&& relation, CheckItem& item, const char* kind) {
    item.holds = true;
    for (std::size_t i = 0; i < n && item.holds; ++i) {
      std::optional<std::size_t> witness;
      for (std::size_t k = 0; k < n; ++k)
        if (relation(k, i)) {
          witness = k;
          break;
        }
      if (!witness) {
        item.holds = false;
        std::ostringstream os;
        os << "cover " << i << " = " << cover_str(covers[i]) << " has no " << kind << "-refinement in the base";
        item.detail = os.str();
      }
    }
    if (item.holds) item.detail = std::string("every member has a ") + kind + "-refinement";
  };

  report.c2b.axiom = "C2(b)";
  single_check(star_ref, report.c2b, "star");
  report.c2b_prime.axiom = "C2'(b)";
  single_check(delta_ref, report.c2b_prime, "delta");

  return report;
}

CheckItem check_hausdorff_report(const CoverBase& base) {
  CheckItem item;
  item.axiom = "C3";
  item.holds = true;
  const auto& alg = base.alg();
  for (std::size_t x = 0; x < alg.point_count() && item.holds; ++x)
    for (std::size_t y = x + 1; y < alg.point_count() && item.holds; ++y) {
      bool separated = false;
      for (const auto& c : base.covers()) {
        bool clean = true;
        for (const auto& u : c.regions())
          if (u.test(x) && u.test(y)) {
            clean = false;
            break;
          }
        if (clean) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        item.holds = false;
        std::ostringstream os;
        os << "points " << x << " and " << y << " share a member of every cover";
        item.detail = os.str();
      }
    }
  if (item.holds) item.detail = "all point pairs separated";
  return item;
}

bool check_hausdorff(const CoverBase& base) { return check_hausdorff_report(base).holds; }

ShrinkingReport check_shrinking_hypotheses(const CoverBase& base, const std::vector<FiniteCover>& shrinks) {
  if (shrinks.size() != base.size())
    throw std::invalid_argument("check_shrinking_hypotheses: one shrink per cover required");
  ShrinkingReport report;
  report.s1.axiom = "S1";
  report.s1.holds = true;
  const auto& covers = base.covers();
  for (std::size_t i = 0; i < covers.size() && report.s1.holds; ++i)
    for (std::size_t j = i; j < covers.size() && report.s1.holds; ++j) {
      FiniteCover meet = intersection_cover(covers[i], covers[j]);
      bool member = false;
      for (const auto& b : covers)
        if (covers_equal(meet, b)) {
          member = true;
          break;
        }
      if (!member) {
        report.s1.holds = false;
        std::ostringstream os;
        os << "intersection of covers " << i << " and " << j << " escapes the base";
        report.s1.detail = os.str();
      }
    }
  if (report.s1.holds) report.s1.detail = "closed under cover intersection";

  const auto& alg = base.alg();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const FiniteCover& d = covers[i];
    const FiniteCover& v = shrinks[i];
    if (!(v.alg() == alg) || !precise_refines(v, d))
      throw std::invalid_argument("check_shrinking_hypotheses: shrink is not a precise refinement of its cover");
    CheckItem item;
    item.axiom = "S2";
    item.holds = true;
    for (std::size_t k = 0; k < d.size() && item.holds; ++k) {
      FiniteCover binary(alg, {d[k], alg.complement(v[k])});
      if (!is_uniform_cover(binary, base)) {
        item.holds = false;
        std::ostringstream os;
        os << "cover " << i << ", index " << k << ": {U, complement(V)} = " << cover_str(binary)
           << " is not a uniform cover of the generated structure";
        item.detail = os.str();
      }
    }
    if (item.holds) {
      std::ostringstream os;
      os << "cover " << i << ": every {U_i, complement(V_i)} is a uniform cover";
      item.detail = os.str();
    }
    report.s2.push_back(std::move(item));
  }

  report.certified = report.s1.holds &&
                     std::all_of(report.s2.begin(), report.s2.end(), [](const CheckItem& i) { return i.holds; });
  return report;
}

namespace {

// All covers of the carrier whose members are drawn from the given list.
// Exponential in the list size, hence the guard.
std::vector<std::vector<std::size_t>> covering_subsets(const FiniteSetAlgebra& alg,
                                                       const std::vector<FiniteRegion>& regions) {
  if (regions.size() > 20) throw std::invalid_argument("region base too large for exhaustive cover search");
  std::vector<std::vector<std::size_t>> out;
  const std::size_t limit = std::size_t{1} << regions.size();
  for (std::size_t mask = 1; mask < limit; ++mask) {
    FiniteRegion covered = alg.empty_region();
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < regions.size(); ++i)
      if (mask & (std::size_t{1} << i)) {
        covered |= regions[i];
        chosen.push_back(i);
      }
    if (covered == alg.carrier_region()) out.push_back(std::move(chosen));
  }
  return out;
}

// Does the indexed family admit a choice of one complement-region per slot
// that still covers?  Plain backtracking; the carriers are tiny.
bool precise_complement_refinement(const FiniteSetAlgebra& alg, const std::vector<FiniteRegion>& members,
                                   const std::vector<FiniteRegion>& complements) {
  std::vector<std::vector<const FiniteRegion*>> candidates(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const auto& w : complements)
      if (alg.is_subset(w, members[i])) candidates[i].push_back(&w);
  FiniteRegion reachable = alg.empty_region();
  for (const auto& cs : candidates)
    for (auto* w : cs) reachable |= *w;
  if (!(reachable == alg.carrier_region())) return false;

  std::vector<const FiniteRegion*> pick(members.size(), nullptr);
  auto rec = [&](auto&& self, std::size_t slot) -> bool {
    if (slot == members.size()) {
      FiniteRegion covered = alg.empty_region();
      for (auto* w : pick) covered |= *w;
      return covered == alg.carrier_region();
    }
    for (auto* w : candidates[slot]) {
      pick[slot] = w;
      if (self(self, slot + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

Cor32Report check_cor32(const FiniteSetAlgebra& alg, const std::vector<FiniteRegion>& raw_region_base,
                        const std::vector<FiniteRegion>& topology) {
  Cor32Report report;

  // The empty region is an implicit member of the base, so it never
  // appears in covers but always contributes its complement.
  std::vector<FiniteRegion> region_base;
  for (const auto& b : raw_region_base)
    if (!alg.is_empty(b)) region_base.push_back(b);

  auto in_list = [&](const std::vector<FiniteRegion>& list, const FiniteRegion& r) {
    return std::any_of(list.begin(), list.end(), [&](const FiniteRegion& s) { return s == r; });
  };

  report.intersection_closed.axiom = "B-intersections";
  report.intersection_closed.holds = true;
  for (std::size_t i = 0; i < region_base.size() && report.intersection_closed.holds; ++i)
    for (std::size_t j = i; j < region_base.size() && report.intersection_closed.holds; ++j) {
      FiniteRegion meet = region_base[i] & region_base[j];
      if (!alg.is_empty(meet) && !in_list(region_base, meet)) {
        report.intersection_closed.holds = false;
        report.intersection_closed.detail =
            "intersection " + region_str(alg, meet) + " missing from the region base";
      }
    }
  if (report.intersection_closed.holds) report.intersection_closed.detail = "closed under intersection";

  report.topology_base.axiom = "B-topology-base";
  report.topology_base.holds = true;
  for (const auto& b : region_base)
    if (!in_list(topology, b)) {
      report.topology_base.holds = false;
      report.topology_base.detail = region_str(alg, b) + " is not a declared open set";
      break;
    }
  if (report.topology_base.holds) {
    for (const auto& open : topology) {
      FiniteRegion built = alg.empty_region();
      for (const auto& b : region_base)
        if (alg.is_subset(b, open)) built |= b;
      if (!(built == open)) {
        report.topology_base.holds = false;
        report.topology_base.detail = "open set " + region_str(alg, open) + " is not a union of base elements";
        break;
      }
    }
  }
  if (report.topology_base.holds) report.topology_base.detail = "base generates the declared topology";

  report.covers_nonempty.axiom = "C_B-nonempty";
  {
    FiniteRegion all = alg.empty_region();
    for (const auto& b : region_base) all |= b;
    report.covers_nonempty.holds = (all == alg.carrier_region());
    report.covers_nonempty.detail = report.covers_nonempty.holds
                                        ? "the base elements cover the carrier"
                                        : "no finite cover by base elements exists";
  }

  std::vector<FiniteRegion> complements;
  complements.reserve(region_base.size() + 1);
  for (const auto& b : region_base) complements.push_back(alg.complement(b));
  complements.push_back(alg.carrier_region());  // complement of the implicit empty member

  report.precise_refinements.axiom = "precise-shrinking";
  report.precise_refinements.holds = report.covers_nonempty.holds;
  std::vector<std::vector<std::size_t>> all_covers;
  if (report.covers_nonempty.holds) {
    all_covers = covering_subsets(alg, region_base);
    for (const auto& chosen : all_covers) {
      std::vector<FiniteRegion> members;
      members.reserve(chosen.size());
      for (auto i : chosen) members.push_back(region_base[i]);
      if (!precise_complement_refinement(alg, members, complements)) {
        report.precise_refinements.holds = false;
        std::ostringstream os;
        os << "cover of " << members.size() << " base elements admits no precise refinement by complements";
        report.precise_refinements.detail = os.str();
        break;
      }
    }
  }
  if (report.precise_refinements.holds && report.covers_nonempty.holds)
    report.precise_refinements.detail = "every base cover shrinks into complements";

  // The topological conclusion: around every point, inside every base
  // neighborhood, some base cover has its ball contained in the
  // neighborhood.  Witnesses follow the {U} + {U_j & complement(V)}
  // construction, with exhaustive search as fallback.
  report.topology_match.axiom = "uniform-topology";
  report.topology_match.holds = report.covers_nonempty.holds;
  if (report.topology_match.holds) {
    for (std::size_t x = 0; x < alg.point_count() && report.topology_match.holds; ++x) {
      for (std::size_t ui = 0; ui < region_base.size() && report.topology_match.holds; ++ui) {
        const FiniteRegion& u = region_base[ui];
        if (!u.test(x)) continue;
        std::optional<FiniteCover> witness;
        if (u == alg.carrier_region()) witness = FiniteCover(alg, {u});  // W = empty member
        for (const auto& w : region_base) {
          if (witness) break;
          if (w.test(x)) continue;                             // need x in complement(w)
          if (!alg.is_subset(alg.complement(u), w)) continue;  // need complement(w) inside u
          std::vector<FiniteRegion> members = {u};
          for (const auto& b : region_base) members.push_back(b & w);
          try {
            FiniteCover c(alg, std::move(members));
            if (alg.is_subset(star(alg.point_region(x), c), u)) {
              witness = std::move(c);
              break;
            }
          } catch (const std::invalid_argument&) {
          }
        }
        if (!witness) {
          for (const auto& chosen : all_covers) {
            std::vector<FiniteRegion> members;
            for (auto i : chosen) members.push_back(region_base[i]);
            FiniteCover c(alg, std::move(members));
            if (alg.is_subset(star(alg.point_region(x), c), u)) {
              witness = std::move(c);
              break;
            }
          }
        }
        if (witness) {
          report.witnesses.push_back(Cor32Witness{x, ui, *std::move(witness)});
        } else {
          report.topology_match.holds = false;
          std::ostringstream os;
          os << "no base cover confines the ball around point " << x << " inside " << region_str(alg, u);
          report.topology_match.detail = os.str();
        }
      }
    }
  }
  if (report.topology_match.holds) report.topology_match.detail = "uniform topology matches the declared one";

  return report;
}

}  // namespace unicover
