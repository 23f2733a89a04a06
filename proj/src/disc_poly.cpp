#include "unicover/disc/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace unicover::disc {

std::vector<Rat> FactoredPoly::coefficients() const {
  if (is_zero()) return {Rat(0)};
  std::vector<Rat> coeffs = {lead_};
  for (const auto& [root, mult] : roots_) {
    for (long k = 0; k < mult; ++k) {
      // multiply by (T - root)
      std::vector<Rat> next(coeffs.size() + 1, Rat(0));
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] += coeffs[i];
        next[i] -= root * coeffs[i];
      }
      coeffs = std::move(next);
    }
  }
  return coeffs;
}

AbsValue seminorm_on_disk(const FactoredPoly& f, const Disk& d) {
  const long p = d.prime();
  if (f.is_zero()) return AbsValue::zero(p);
  AbsValue value = abs_or_zero(f.lead(), p);
  for (const auto& [root, mult] : f.roots()) {
    AbsValue dist = abs_diff(d.center(), root, p);
    AbsValue factor = std::max(dist, d.radius());
    value = value * factor.pow(mult);
  }
  return value;
}

std::optional<AbsValue> try_seminorm(const FactoredPoly& f, const BerkPoint& x) {
  if (x.kind() != BerkPoint::Kind::IV) return seminorm_on_disk(f, x.disk());
  if (f.is_zero()) return AbsValue::zero(x.prime());
  // Once all roots sit outside the deepest stored disk, every factor is
  // pinned by the ultrametric and the value is exact for the whole nest.
  const Disk& deepest = x.deepest();
  for (const auto& [root, mult] : f.roots())
    if (deepest.contains_point(root)) return std::nullopt;
  return seminorm_on_disk(f, deepest);
}

AbsValue seminorm(const FactoredPoly& f, const BerkPoint& x) {
  auto v = try_seminorm(f, x);
  if (!v) throw std::domain_error("seminorm: indeterminate at this prefix depth");
  return *v;
}

AbsValue seminorm_upper_bound(const FactoredPoly& f, const BerkPoint& x) {
  if (x.kind() != BerkPoint::Kind::IV) return seminorm_on_disk(f, x.disk());
  return seminorm_on_disk(f, x.deepest());
}

std::vector<Rat> sum_coefficients(const FactoredPoly& f, const FactoredPoly& g) {
  std::vector<Rat> a = f.coefficients();
  std::vector<Rat> b = g.coefficients();
  if (a.size() < b.size()) a.swap(b);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

namespace {

// Divide by (T - root); the remainder must vanish.
std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& root) {
  std::vector<Rat> quotient(coeffs.size() - 1, Rat(0));
  Rat carry = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    quotient[i] = carry;
    carry = coeffs[i] + root * carry;
  }
  return quotient;
}

}  // namespace

std::optional<FactoredPoly> refactor(const std::vector<Rat>& coefficients) {
  std::vector<Rat> coeffs = coefficients;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) return FactoredPoly::zero();
  if (coeffs.size() == 1) return FactoredPoly::constant(coeffs[0]);

  FactoredPoly::RootList roots;
  while (coeffs.size() > 1 && coeffs[0] == 0) {
    roots.emplace_back(Rat(0), 1);
    coeffs.erase(coeffs.begin());
  }

  // Bounded-height root search; enough for the small-root data this
  // library manipulates, and a clean miss otherwise.
  constexpr long kNumBound = 64;
  constexpr long kDenBound = 16;
  bool progress = true;
  while (coeffs.size() > 1 && progress) {
    progress = false;
    for (long den = 1; den <= kDenBound && !progress; ++den) {
      for (long num = -kNumBound; num <= kNumBound && !progress; ++num) {
        if (std::gcd(std::abs(num), den) != 1) continue;
        Rat candidate = make_rat(num, den);
        Rat value(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) value = value * candidate + coeffs[i];
        if (value == 0) {
          roots.emplace_back(candidate, 1);
          coeffs = deflate(coeffs, candidate);
          progress = true;
        }
      }
    }
  }
  if (coeffs.size() > 1) return std::nullopt;
  return FactoredPoly(coeffs[0], std::move(roots));
}

}  // namespace unicover::disc
