#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pointless/frame.hpp"
#include "pointless/presentation.hpp"
#include "pointless/tensor.hpp"
#include "pointless/waybelow.hpp"

namespace pointless {

// ------------------------------------------------------------------ Ω(Sᴬ)

/// The relations on the symbols ⟦s⟧ = [s ≪ O], one per s in Ω(A):
///   R1  s <= s'             gives  ⟦s'⟧ <= ⟦s⟧
///   R2  s = s1 ∨ s2         gives  ⟦s1⟧ ∧ ⟦s2⟧ <= ⟦s⟧, and ⊤ <= ⟦⊥⟧
///   R3  ⟦s⟧ <= ⋁{⟦s'⟧ : s ≪ s'}
/// Binary and nullary joins generate every finite join, so R2 is listed for
/// those only.
struct SExpPresentation {
  struct Antitone {
    Elem lower;
    Elem upper;
  };
  struct FiniteJoin {
    std::vector<Elem> parts;
    Elem join;
  };
  struct Interpolation {
    Elem s;
    std::vector<Elem> above;
  };

  Frame base;
  std::vector<Antitone> r1;
  std::vector<FiniteJoin> r2;
  std::vector<Interpolation> r3;

  static SExpPresentation make(const WayBelowOracle& wb);
};

/// First relation an assignment ⟦s⟧ |-> g[s] in z breaks, if any.
std::optional<std::string> check_sexp_assignment(const SExpPresentation& rel, const Frame& z,
                                                 std::span<const Elem> g);

/// Ω(Sᴬ) as C-ideals of the join-semilattice of Ω(A) read as a meet-semilattice
/// (so ⟦s⟧ ∧ ⟦s'⟧ = ⟦s ∨ s'⟧ and ⟦⊥⟧ is the top) under the R3 coverage.
class SierpinskiExp {
 public:
  SierpinskiExp() = default;

  static SierpinskiExp make(const Frame& base, std::size_t cap = kDefaultIdealCap);
  static SierpinskiExp make(const WayBelowOracle& wb, std::size_t cap = kDefaultIdealCap);

  const Frame& base() const { return wb_->frame(); }
  const WayBelowOracle& way_below() const { return *wb_; }
  const SExpPresentation& relations() const { return rel_; }
  const PresentedFrame& presented() const { return presented_; }
  const Frame& frame() const { return presented_.frame(); }
  std::size_t size() const { return presented_.size(); }
  /// The open ⟦s⟧.
  Elem generator(Elem s) const { return presented_.embed(s); }

 private:
  std::optional<WayBelowOracle> wb_;
  SExpPresentation rel_;
  PresentedFrame presented_;
};

SierpinskiExp sierpinski_exp(const Frame& base, std::size_t cap = kDefaultIdealCap);

/// Upper sets of Ω(A) ordered by inclusion, enumerated directly. Labels list
/// the members: "{}", "{top}", "{a,top}", ...
Frame scott_oracle(const Frame& base);

/// Upper set of the given open, as an element of scott_oracle(base).
Elem scott_principal(const Frame& oracle, const Frame& base, Elem s);

struct IsoCheck {
  bool ok = false;
  /// Ω(Sᴬ) -> scott_oracle(A) when ok.
  std::optional<FrameHom> iso;
  std::string mismatch;
};

/// Extends ⟦s⟧ |-> {a : s ≪ a} to a homomorphism and checks it is an order
/// isomorphism onto the upper-set oracle.
IsoCheck exp_iso_check(const SierpinskiExp& e);

/// The homomorphism Ω(Sᴬ) -> Ω(Z) of u in Ω(Z) ⊗ Ω(A):
/// ⟦s⟧ |-> ⋁{z : ∃ s' with s ≪ s' and z ⊗ s' <= u}. `za` is Z ⊗ A. Every
/// R1-R3 instance is checked; a violation raises InternalError.
FrameHom curry(const SierpinskiExp& e, const TensorFrame& za, Elem u);

/// ⋁_s h(⟦s⟧) ⊗ s in Z ⊗ A.
Elem uncurry(const SierpinskiExp& e, const TensorFrame& za, const FrameHom& h);

/// ⋁_s ⟦s⟧ ⊗ s in Ω(Sᴬ) ⊗ Ω(A); `ea` must be Ω(Sᴬ) ⊗ A.
Elem evaluation_open(const SierpinskiExp& e, const TensorFrame& ea);
TensorFrame evaluation_tensor(const SierpinskiExp& e, std::size_t cap = kDefaultIdealCap);

/// The point p_a of Sᴬ for the open a: curry of ⊤ ⊗ a with Z the terminal
/// locale.
Point exp_point(const SierpinskiExp& e, Elem a);

struct UniversalCase {
  std::string z;
  std::size_t tensor_elements = 0;
  std::size_t hom_count = 0;
  bool bijection = false;
};

struct UniversalReport {
  bool ok = true;
  std::string failure;
  std::vector<UniversalCase> cases;
  std::size_t squares = 0;

  void fail(std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  }
};

/// For every Z: curry and uncurry are mutually inverse between Ω(Z) ⊗ Ω(A)
/// and the homomorphisms Ω(Sᴬ) -> Ω(Z), the latter enumerated independently.
/// For every homomorphism g : Ω(Z) -> Ω(Z') between test frames the square
/// curry(g ⊗ id (u)) = g ∘ curry(u) is checked for all u.
UniversalReport verify_universal(const SierpinskiExp& e, const std::vector<Frame>& zs);

struct LemmaReport {
  bool ok = true;
  std::string failure;
  /// Triples (d', a', a) with p_a ∈ d' and d' ⊗ a' <= ev that were checked.
  std::size_t triples = 0;
  std::size_t covers = 0;
  std::size_t directed_families = 0;

  void fail(std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  }
};

/// Point and evaluation properties of a finite exponential:
///  - p_a <= p_b iff a <= b, and opens of Sᴬ are upward closed in points;
///  - p_a ∈ d' and d' ⊗ a' <= ev imply a' <= a;
///  - for every cover of a, some member b of its directification has
///    p_b ∈ d' and a' <= b;
///  - a is the join of those a';
///  - the join of a directified family of points is computed pointwise.
LemmaReport check_lemmas(const SierpinskiExp& e);

// ------------------------------------------------------------------ Ω(Bᴬ)

/// One instantiated schema on generators (a, b) = [a ≪ f*(b)]:
///   ⋀ lhs <= ⋁ rhs                                 (schemas 1-7)
///   ⋀ lhs <= ⋁_{covers (a_α) of a} ⋀_α (a_α, b_α)   (schema 8)
struct BExpInstance {
  int schema = 0;
  std::vector<std::pair<Elem, Elem>> lhs;
  std::vector<std::pair<Elem, Elem>> rhs;
  /// Schema 8: the open a and the family b_α.
  Elem a = 0;
  std::vector<Elem> family;
};

struct BExpRelationSet {
  Frame base_a;
  Frame base_b;
  std::vector<BExpInstance> instances;

  std::size_t generator(Elem a, Elem b) const { return a * base_b.size() + b; }
  std::size_t generator_count() const { return base_a.size() * base_b.size(); }
};

/// All eight schemata over finite A and B. Directed covers of b are the
/// directifications of subsets with join >= b; finite covers are subsets
/// with join >= b, the empty one included.
BExpRelationSet bexp_relations(const WayBelowOracle& wba, const Frame& b);
BExpRelationSet bexp_relations(const Frame& a, const Frame& b);

/// Value of both sides of an instance under g : generators -> Ω(Z).
std::pair<Elem, Elem> bexp_sides(const BExpRelationSet& rel, const BExpInstance& inst, const Frame& z,
                                 std::span<const Elem> g);

/// Index of the first instance g breaks, if any.
std::optional<std::size_t> check_bexp_assignment(const BExpRelationSet& rel, const Frame& z,
                                                 std::span<const Elem> g);

/// Every assignment generators -> Ω(Z) satisfying all instances, sorted.
/// With threads > 1 the search is split on the first variable and merged.
/// ResourceError once more than `cap` solutions turn up.
std::vector<std::vector<Elem>> bexp_assignments(const BExpRelationSet& rel, const Frame& z,
                                                unsigned threads = 1, std::size_t cap = 1u << 20);

struct BExpCase {
  std::string z;
  std::size_t assignments = 0;
  std::size_t homs = 0;
  bool bijection = false;
};

struct BExpReport {
  bool ok = true;
  std::string failure;
  std::vector<BExpCase> cases;

  void fail(std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  }
};

/// For each Z: the valid assignments are in bijection with the homomorphisms
/// Ω(B) -> Ω(Z) ⊗ Ω(A) via g |-> (b |-> ⋁_a g(a, b) ⊗ a) and
/// k |-> ((a, b) |-> ⋁{z : ∃ a' with a ≪ a' and z ⊗ a' <= k(b)}).
BExpReport verify_bexp_universal(const Frame& a, const Frame& b, const std::vector<Frame>& zs,
                                 unsigned threads = 1);

/// Ω(Bᴬ) materialized as C-ideals of the free meet-semilattice on the pairs
/// (a, b). ResourceError when |A|·|B| exceeds `max_pairs`; the free
/// semilattice has 2^(|A|·|B|) elements.
PresentedFrame materialize_bexp(const Frame& a, const Frame& b, std::size_t cap = kDefaultIdealCap,
                                std::size_t max_pairs = 6);

}  // namespace pointless
