#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pointless::chains {

/// Element of the ascending chain ω+1 of opens [0, n) of [0, ∞):
/// Fin(0) = ⊥ < Fin(1) < ... < Limit = ∞ = ⊤.
struct AscElem {
  enum class Kind : std::uint8_t { fin, limit };
  Kind kind = Kind::fin;
  std::uint64_t n = 0;

  static constexpr AscElem fin(std::uint64_t n) { return {Kind::fin, n}; }
  static constexpr AscElem limit() { return {Kind::limit, 0}; }
  static constexpr AscElem bottom() { return fin(0); }
  static constexpr AscElem top() { return limit(); }

  bool is_limit() const { return kind == Kind::limit; }
  bool operator==(const AscElem&) const = default;
  std::strong_ordering operator<=>(const AscElem& o) const {
    if (kind != o.kind) return kind <=> o.kind;
    return n <=> o.n;
  }
  std::string str() const;
};

/// Element of the descending chain of opens [0, e^-k) of [0, 1]:
/// ⊤ = Y(0) > Y(1) > Y(2) > ... > ⊥, where ⊥ is the infimum of all Y(k).
/// The comparison operators follow the frame order.
struct DescElem {
  enum class Kind : std::uint8_t { bottom, index };
  Kind kind = Kind::bottom;
  std::uint64_t k = 0;

  static constexpr DescElem y(std::uint64_t k) { return {Kind::index, k}; }
  static constexpr DescElem bottom() { return {Kind::bottom, 0}; }
  static constexpr DescElem top() { return y(0); }

  bool is_bottom() const { return kind == Kind::bottom; }
  bool operator==(const DescElem&) const = default;
  std::strong_ordering operator<=>(const DescElem& o) const {
    if (kind != o.kind) return kind <=> o.kind;
    return o.k <=> k;
  }
  std::string str() const;
};

/// a ≪ b in ω+1: a <= b and a is not the limit, which is the sup of the
/// elements strictly below it.
bool asc_way_below(AscElem a, AscElem b);
/// a ≪ b in the descending chain. Every nonempty subset attains its sup, so
/// every element is compact and ≪ coincides with <=.
bool desc_way_below(DescElem a, DescElem b);

struct ChainCompactness {
  bool locally_compact = true;
  std::string reason;
};
/// Local compactness by the analytic rule: finite elements are compact and
/// ∞ is the sup of the finite elements, each of which is way below it.
ChainCompactness asc_locally_compact();
ChainCompactness desc_locally_compact();

/// Interpolant lower ≪ s ≪ upper in ω+1 via the general construction over
/// the truncated family Fin(0..n+1) ∪ {∞}. Throws DomainError unless
/// lower ≪ upper.
AscElem asc_interpolate(AscElem lower, AscElem upper);

/// C-ideal of (descending chain) ⊗ (ω+1), stored as its height function
/// h : ω+1 -> descending chain, so that y ⊗ x belongs to it iff y <= h(x).
/// h(Fin 0) = ⊤ and h is antitone. Heights Fin(1..N) are explicit; beyond
/// N a tail rule applies: either a constant height or the descending
/// diagonal h(Fin n) = Y(n + offset). The limit row h(∞) is the infimum of
/// the finite heights.
class StaircaseIdeal {
 public:
  struct Tail {
    enum class Kind : std::uint8_t { constant, diagonal };
    Kind kind = Kind::constant;
    DescElem height = DescElem::bottom();
    std::uint64_t offset = 0;
  };
  struct Step {
    AscElem threshold;
    DescElem height;
  };

  /// h(Fin n) = ⊥ for n > 0.
  static StaircaseIdeal bottom();
  /// h ≡ ⊤.
  static StaircaseIdeal top();
  /// Generated by finitely many rectangles y ⊗ x (x may be ∞).
  static StaircaseIdeal from_rectangles(const std::vector<std::pair<DescElem, AscElem>>& rects);
  /// Generated by {Y(n + offset) ⊗ Fin(n) : n >= 0}, the area under the
  /// decaying curve.
  static StaircaseIdeal diagonal(std::uint64_t offset = 0);
  /// The first n <= last of those generators only.
  static StaircaseIdeal truncated_diagonal(std::uint64_t last, std::uint64_t offset = 0);

  DescElem height(AscElem x) const;
  bool member(DescElem y, AscElem x) const { return y <= height(x); }

  /// Compressed height function: h is `height` on (previous threshold,
  /// threshold]; the tail follows the last step.
  std::vector<Step> steps() const;
  const Tail& tail() const { return tail_; }
  std::uint64_t explicit_length() const { return heights_.size(); }

  /// Checks h(Fin 0) = ⊤, antitone, and limit saturation. Empty string when
  /// valid.
  std::string validate() const;

 private:
  std::vector<DescElem> heights_;  // h(Fin 1), ..., h(Fin N)
  Tail tail_;
};

/// Height of the staircase at s: the join of its y-column.
DescElem stair_coeff(const StaircaseIdeal& u, AscElem s);
/// ⋁{y : ∃ s' with s ≪ s' and y ⊗ s' in u}. Bottom at s = ∞, which is
/// way below nothing.
DescElem stair_big_f(const StaircaseIdeal& u, AscElem s);

/// The point 0 of [0, 1]: the map from the descending chain to {⊥ < ⊤}
/// sending every Y(k) to ⊤ and ⊥ to ⊥.
bool zero_point(DescElem y);
/// Confirms zero_point is a frame homomorphism: it preserves top, bottom
/// and binary meets/joins on every truncation Y(0..k) ∪ {⊥} up to `depth`,
/// and arbitrary joins because every nonempty subset attains its sup.
std::string validate_zero_point(std::uint64_t depth = 64);

/// Image of u under (zero_point ⊗ id) in 2 ⊗ ω+1 ≅ ω+1: the join of the
/// x-columns whose height is above ⊥.
AscElem point_pushforward(const StaircaseIdeal& u);

struct NaturalityReport {
  /// coeff_s(f̂* u) in {⊥, ⊤}
  bool coeff_after_pushforward = false;
  /// f* coeff_s(u) in {⊥, ⊤}
  bool pushforward_of_coeff = false;
  bool equal() const { return coeff_after_pushforward == pushforward_of_coeff; }
};

/// Both sides of the naturality square for coeff_s along the point 0.
NaturalityReport naturality_at(const StaircaseIdeal& u, AscElem s);

/// The square at s = ∞ for the area under the decaying curve.
NaturalityReport counterexample_report();
NaturalityReport counterexample_report(const StaircaseIdeal& u);

/// ASCII sketch of the first `columns` columns and the limit column.
std::string sketch(const StaircaseIdeal& u, std::uint64_t columns = 8, std::uint64_t rows = 6);

}  // namespace pointless::chains
