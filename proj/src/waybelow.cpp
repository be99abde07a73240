#include "pointless/waybelow.hpp"

#include <numeric>

namespace pointless {

WayBelowOracle WayBelowOracle::finite(const Frame& f) {
  return WayBelowOracle(f, [f](Elem a, Elem b) { return f.leq(a, b); });
}

bool way_below(const Frame& f, Elem a, Elem b) {
  f.require(a);
  f.require(b);
  return f.leq(a, b);
}

bool way_below_by_definition(const Frame& f, Elem a, Elem b, bool exact_join) {
  f.require(a);
  f.require(b);
  const std::size_t n = f.size();
  if (n > 12) throw ResourceError("definitional way-below check is capped at 12 elements", n);
  auto join_of = [&](std::uint32_t mask) {
    Elem j = f.bottom();
    for (Elem e = 0; e < n; ++e)
      if (mask >> e & 1) j = f.join(j, e);
    return j;
  };
  for (std::uint32_t cover = 0; cover < (1u << n); ++cover) {
    Elem j = join_of(cover);
    if (exact_join ? j != b : !f.leq(b, j)) continue;
    bool found = false;
    // every subset of the cover, the empty one included
    for (std::uint32_t sub = cover;; sub = (sub - 1) & cover) {
      if (f.leq(a, join_of(sub))) {
        found = true;
        break;
      }
      if (sub == 0) break;
    }
    if (!found) return false;
  }
  return true;
}

bool is_compact(const Frame& f, Elem a) { return way_below(f, a, a); }

LocalCompactness locally_compact(const WayBelowOracle& wb) {
  const Frame& f = wb.frame();
  for (Elem a = 0; a < f.size(); ++a) {
    Elem j = f.bottom();
    for (Elem x = 0; x < f.size(); ++x)
      if (wb(x, a)) j = f.join(j, x);
    if (j != a) return {false, a};
  }
  return {};
}

LocalCompactness locally_compact(const Frame& f) { return locally_compact(WayBelowOracle::finite(f)); }

Elem interpolate(const WayBelowOracle& wb, Elem lower, Elem upper) {
  const Frame& f = wb.frame();
  f.require(lower);
  f.require(upper);
  if (!wb(lower, upper))
    throw DomainError("interpolate needs " + f.label(lower) + " way below " + f.label(upper));
  std::vector<Elem> candidates(f.size());
  std::iota(candidates.begin(), candidates.end(), Elem{0});
  auto s = interpolate_over<Elem>(
      candidates, f.bottom(), lower, upper, wb, [&](Elem x, Elem y) { return f.leq(x, y); },
      [&](Elem x, Elem y) { return f.join(x, y); });
  if (!s || !wb(lower, *s) || !wb(*s, upper))
    throw InternalError("interpolation failed between " + f.label(lower) + " and " + f.label(upper));
  return *s;
}

Elem interpolate(const Frame& f, Elem lower, Elem upper) {
  return interpolate(WayBelowOracle::finite(f), lower, upper);
}

}  // namespace pointless
