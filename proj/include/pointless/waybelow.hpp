#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pointless/frame.hpp"

namespace pointless {

/// A decidable way-below relation on a finite frame.
class WayBelowOracle {
 public:
  WayBelowOracle(Frame f, std::function<bool(Elem, Elem)> rel)
      : frame_(std::move(f)), rel_(std::move(rel)) {}

  /// On a finite frame every cover of b is finite, so a ≪ b iff a <= b.
  static WayBelowOracle finite(const Frame& f);

  const Frame& frame() const { return frame_; }
  bool operator()(Elem a, Elem b) const { return rel_(a, b); }

 private:
  Frame frame_;
  std::function<bool(Elem, Elem)> rel_;
};

/// a ≪ b on a finite frame.
bool way_below(const Frame& f, Elem a, Elem b);

/// a ≪ b straight from the definition: every subset whose join is at least b
/// (exactly b with `exact_join`) has a subset whose join is at least a.
/// Exponential in |f|; ResourceError above 12 elements.
bool way_below_by_definition(const Frame& f, Elem a, Elem b, bool exact_join = false);

bool is_compact(const Frame& f, Elem a);

struct LocalCompactness {
  bool locally_compact = true;
  /// First element that is not the join of the elements way below it.
  std::optional<Elem> witness;
};

LocalCompactness locally_compact(const WayBelowOracle& wb);
LocalCompactness locally_compact(const Frame& f);

/// Interpolant following the local-compactness argument: the pairs t ≪ s ≪
/// upper cover upper, a finite subfamily of them covers lower, and the join
/// of the matching s is the interpolant. Pairs are drawn from `candidates`
/// (ordered by s, then t); pairs whose t lies below `lower` are tried first.
/// Returns nullopt when the candidates do not cover `lower`.
template <class E, class WayBelow, class Leq, class Join>
std::optional<E> interpolate_over(std::span<const E> candidates, E bottom, E lower, E upper,
                                  WayBelow&& wb, Leq&& leq, Join&& join) {
  std::vector<std::pair<E, E>> pairs;
  for (const E& s : candidates) {
    if (!wb(s, upper)) continue;
    for (const E& t : candidates)
      if (wb(t, s)) pairs.emplace_back(t, s);
  }
  for (bool restrict_to_lower : {true, false}) {
    E covered = bottom;
    E result = bottom;
    for (const auto& [t, s] : pairs) {
      if (leq(lower, covered)) break;
      if (leq(t, covered)) continue;
      if (restrict_to_lower && !leq(t, lower)) continue;
      covered = join(covered, t);
      result = join(result, s);
    }
    if (leq(lower, covered)) return result;
  }
  return std::nullopt;
}

/// Some s with lower ≪ s ≪ upper. DomainError unless lower ≪ upper;
/// InternalError if the produced interpolant fails either relation.
Elem interpolate(const WayBelowOracle& wb, Elem lower, Elem upper);
Elem interpolate(const Frame& f, Elem lower, Elem upper);

}  // namespace pointless
