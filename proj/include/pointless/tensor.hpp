#pragma once

#include <utility>
#include <vector>

#include "pointless/frame.hpp"
#include "pointless/presentation.hpp"
#include "pointless/waybelow.hpp"

namespace pointless {

/// Irredundant tensor coverage on Ω(X) × Ω(Y): for nonempty antichains xs,
/// ys without bottom, not both singletons, (⋁xs, ⋁ys) ◁ {(x, y)}; plus
/// (⊥, y) ◁ ∅ and (x, ⊥) ◁ ∅. Closed under meet-translation up to
/// subsumption, so no expansion is needed.
std::vector<CoverageInstance> tensor_coverage(const Frame& left, const Frame& right);

/// Ω(X) ⊗ Ω(Y) as the frame of C-ideals of Ω(X) × Ω(Y).
class TensorFrame {
 public:
  TensorFrame() = default;

  static TensorFrame make(const Frame& left, const Frame& right, std::size_t cap = kDefaultIdealCap);

  const Frame& left() const { return left_; }
  const Frame& right() const { return right_; }
  const Frame& frame() const { return presented_.frame(); }
  const PresentedFrame& presented() const { return presented_; }
  std::size_t size() const { return presented_.size(); }

  Elem generator(Elem x, Elem y) const { return x * right_.size() + y; }
  /// The rectangle x ⊗ y: principal C-ideal of (x, y).
  Elem rect(Elem x, Elem y) const;
  /// x ⊗ y <= u.
  bool contains(Elem u, Elem x, Elem y) const { return presented_.contains(u, generator(x, y)); }

  /// x |-> x ⊗ ⊤ and y |-> ⊤ ⊗ y.
  FrameHom left_injection() const;
  FrameHom right_injection() const;

 private:
  Frame left_;
  Frame right_;
  PresentedFrame presented_;
};

/// f ⊗ id : Ω(Y) ⊗ Ω(X) -> Ω(Z) ⊗ Ω(X) for f : Ω(Y) -> Ω(Z), determined by
/// y ⊗ x |-> f(y) ⊗ x. `source` and `target` must have f's frames on the left
/// and the same right factor.
FrameHom product_map(const FrameHom& f, const TensorFrame& source, const TensorFrame& target);

struct ProductMap {
  TensorFrame source;
  TensorFrame target;
  FrameHom map;
};
ProductMap product_map(const FrameHom& f, const Frame& right);

/// ⋁{y : y ⊗ s <= u}, a left element for right element s.
Elem coeff(const TensorFrame& t, Elem s, Elem u);

/// ⋁{y : ∃ s' with s ≪ s' and y ⊗ s' <= u}; `wb` is a relation on the right
/// factor.
Elem big_f(const TensorFrame& t, const WayBelowOracle& wb, Elem s, Elem u);

/// The pairs (coeff(s, u), s) for every right element s; their rectangles
/// join to u (checked, InternalError otherwise).
std::vector<std::pair<Elem, Elem>> decompose(const TensorFrame& t, Elem u);

/// Join of the given rectangles.
Elem join_of_rects(const TensorFrame& t, const std::vector<std::pair<Elem, Elem>>& rects);

}  // namespace pointless
