#include "unicover/entourages.hpp"

#include <sstream>
#include <stdexcept>

namespace unicover {

EntourageReport check_entourage_axioms(const std::vector<Entourage>& base) {
  if (base.empty()) throw std::invalid_argument("check_entourage_axioms: empty collection");
  const std::size_t n = base.front().carrier_size();
  for (const auto& e : base)
    if (e.carrier_size() != n) throw std::invalid_argument("check_entourage_axioms: carrier mismatch");

  EntourageReport report;

  report.e1.axiom = "E1";
  report.e1.holds = true;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!base[i].contains_diagonal()) {
      report.e1.holds = false;
      std::ostringstream os;
      os << "entourage " << i << " misses part of the diagonal";
      report.e1.detail = os.str();
      break;
    }
  if (report.e1.holds) report.e1.detail = "all members contain the diagonal";

  report.e2.axiom = "E2";
  report.e2.holds = true;
  for (std::size_t i = 0; i < base.size(); ++i) {
    Entourage t = base[i].transpose();
    bool inside = false;
    for (const auto& w : base)
      if (w.is_subset_of(t)) {
        inside = true;
        break;
      }
    if (!inside) {
      report.e2.holds = false;
      std::ostringstream os;
      os << "transpose of entourage " << i << " contains no member";
      report.e2.detail = os.str();
      break;
    }
  }
  if (report.e2.holds) report.e2.detail = "transposes stay in the filter";

  report.e3.axiom = "E3";
  report.e3.holds = true;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::optional<std::size_t> witness;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (base[j].compose(base[j]).is_subset_of(base[i])) {
        witness = j;
        break;
      }
    if (!witness) {
      report.e3.holds = false;
      std::ostringstream os;
      os << "no W with W∘W inside entourage " << i;
      report.e3.detail = os.str();
      break;
    }
  }
  if (report.e3.holds) report.e3.detail = "composition witnesses found for every member";

  report.filter.axiom = "filter";
  report.filter.holds = true;
  for (std::size_t i = 0; i < base.size() && report.filter.holds; ++i)
    for (std::size_t j = i; j < base.size() && report.filter.holds; ++j) {
      Entourage meet = base[i] & base[j];
      bool inside = false;
      for (const auto& w : base)
        if (w.is_subset_of(meet)) {
          inside = true;
          break;
        }
      if (!inside) {
        report.filter.holds = false;
        std::ostringstream os;
        os << "intersection of entourages " << i << " and " << j << " contains no member";
        report.filter.detail = os.str();
      }
    }
  if (report.filter.holds) report.filter.detail = "pairwise intersections contain members";

  return report;
}

std::vector<Entourage> covers_to_entourages(const CoverBase& base) {
  const std::size_t n = base.alg().point_count();
  std::vector<Entourage> out;
  out.reserve(base.size());
  for (const auto& c : base.covers()) {
    Entourage e(n);
    for (const auto& v : c.regions()) {
      auto pts = base.alg().points_of(v);
      for (auto x : pts)
        for (auto y : pts) e.set(x, y);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace unicover
