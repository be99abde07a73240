#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pointless/bits.hpp"
#include "pointless/frame.hpp"

namespace pointless {

/// Finite meet-semilattice of generators with a top element.
class GenSemilattice {
 public:
  GenSemilattice() = default;

  /// meet[a * n + b] = a ∧ b. Throws StructureError unless the table is
  /// associative, commutative and idempotent with `top` as identity.
  static GenSemilattice from_table(std::vector<std::string> names, std::vector<Elem> meet, Elem top);

  /// The meet-semilattice reduct of a frame.
  static GenSemilattice of_frame(const Frame& f);
  /// The join-semilattice of a frame read as a meet-semilattice: the
  /// generator order is the reverse of the frame order and the top is the
  /// frame's bottom.
  static GenSemilattice of_frame_joins(const Frame& f);
  /// Componentwise meets on the product, element (x, y) at x * |right| + y.
  static GenSemilattice product(const GenSemilattice& left, const GenSemilattice& right);
  /// Free meet-semilattice on the given symbols: finite subsets under
  /// union, the empty subset being the top. Subset s is element s (bitmask).
  static GenSemilattice free_on(const std::vector<std::string>& symbols);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem e) const { return names_[e]; }
  std::optional<Elem> find(std::string_view name) const;
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem top() const { return top_; }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
  /// Principal downset of a.
  const Bits& down(Elem a) const { return down_[a]; }

 private:
  GenSemilattice(std::vector<std::string> names, std::vector<Elem> meet, Elem top);

  std::vector<std::string> names_;
  std::vector<Elem> meet_;
  Elem top_ = 0;
  std::vector<Bits> down_;
  std::unordered_map<std::string, Elem> index_;
};

/// target ◁ cover: any C-ideal containing the cover contains the target.
struct CoverageInstance {
  Elem target = 0;
  std::vector<Elem> cover;
};

/// Generators plus coverage instances. Instances are meet-stabilized on
/// construction: for every generator g the translate
/// (g ∧ target) ◁ {g ∧ c} is added. Instances already closed under
/// translation (the tensor coverage) may skip the expansion.
class Presentation {
 public:
  enum class Stability { expand, already_stable };

  /// A stabilized, deduplicated rule with its target's principal downset.
  struct Rule {
    Elem target = 0;
    Bits cover;
    Bits target_down;
  };

  Presentation() = default;
  Presentation(GenSemilattice gens, std::vector<CoverageInstance> instances,
               Stability stability = Stability::expand);

  const GenSemilattice& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<CoverageInstance>& instances() const { return instances_; }
  const std::vector<Rule>& rules() const { return rules_; }
  /// Indices of rules whose cover contains generator x.
  const std::vector<std::size_t>& rules_with_member(Elem x) const { return by_member_[x]; }

 private:
  GenSemilattice gens_;
  std::vector<CoverageInstance> instances_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_member_;
};

Bits down_closure(const GenSemilattice& g, const Bits& s);
bool is_downset(const GenSemilattice& g, const Bits& s);

/// Downset and closed under every instance and every meet-translate of it,
/// checked directly from the raw instances.
bool is_c_ideal(const Presentation& p, const Bits& d);

/// d together with the targets of every rule whose cover lies in d,
/// down-closed. d must be a downset.
Bits one_step(const Presentation& p, const Bits& d);

/// Least C-ideal containing d (worklist over rules whose covers fill up).
Bits saturate(const Presentation& p, const Bits& d);
/// Least C-ideal containing closed ∪ extra, where `closed` is already a
/// C-ideal; only rules touched by the new elements are revisited.
Bits saturate_from(const Presentation& p, const Bits& closed, const Bits& extra);
/// Same result as saturate, by iterating one_step until it stops changing.
Bits saturate_naive(const Presentation& p, const Bits& d);

/// Least n with one_step^n(d) = one_step^(n+1)(d).
std::size_t stabilization_depth(const Presentation& p, const Bits& d);

/// Every downset of the semilattice, in a fixed order. Exponential; for
/// exhaustive tests on small semilattices.
std::vector<Bits> all_downsets(const GenSemilattice& g, std::size_t cap = 1u << 20);

inline constexpr std::size_t kDefaultIdealCap = 4096;

/// The frame of C-ideals of a presentation.
class PresentedFrame {
 public:
  PresentedFrame() = default;

  /// Enumerates all C-ideals as joins of principal ones. Throws
  /// ResourceError naming the count once `cap` is exceeded.
  static PresentedFrame build(Presentation p, std::size_t cap = kDefaultIdealCap,
                              std::string name = {});

  const Presentation& presentation() const { return p_; }
  const Frame& frame() const { return frame_; }
  std::size_t size() const { return ideals_.size(); }
  const Bits& ideal(Elem u) const { return ideals_[u]; }
  /// Element whose C-ideal is exactly `ideal`, if any.
  std::optional<Elem> find(const Bits& ideal) const;
  /// The C-ideal generated by a downset, as a frame element.
  Elem generated_by(const Bits& downset) const;
  /// The principal C-ideal of generator g.
  Elem embed(Elem g) const { return embedding_[g]; }
  bool contains(Elem u, Elem g) const { return ideals_[u].test(g); }

 private:
  Presentation p_;
  std::vector<Bits> ideals_;
  std::unordered_map<Bits, Elem, BitsHash> index_;
  std::vector<Elem> embedding_;
  Frame frame_;
};

/// Why an assignment of generators does not extend to a homomorphism.
struct AssignmentViolation {
  enum class Kind { top, meet, cover };
  Kind kind = Kind::top;
  Elem a = 0;
  Elem b = 0;
  std::size_t instance = 0;
  std::string message;
};

struct AssignmentResult {
  std::optional<FrameHom> hom;
  std::optional<AssignmentViolation> violation;

  bool ok() const { return hom.has_value(); }
};

/// Extends a meet-preserving assignment of generators to the homomorphism
/// sending a C-ideal to the join of its members' images, provided every
/// instance t ◁ C satisfies a(t) <= ⋁ a(C).
AssignmentResult eval_assignment(const PresentedFrame& pf, const Frame& target,
                                 std::span<const Elem> assignment);

/// Reads the presentation format:
///
///     gens <id>...
///     meet <a> <b> <c>        # a ∧ b = c
///     cover <target> | <member>...
///
/// a ∧ a = a is implicit and a ∧ b = c also defines b ∧ a; every other pair
/// must be given. The top is the element acting as the meet identity.
/// Throws ParseError (line numbers) or StructureError (semilattice laws).
Presentation parse_presentation_text(std::istream& in);
Presentation parse_presentation_text(std::string_view text);

}  // namespace pointless
