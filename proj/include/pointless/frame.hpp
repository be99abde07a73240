#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pointless/bits.hpp"
#include "pointless/errors.hpp"

namespace pointless {

/// Index of an element in a finite poset or frame.
using Elem = std::size_t;
/// Sorted list of distinct elements.
using ElemSet = std::vector<Elem>;

/// Finite partial order on named elements. The order is stored closed
/// (reflexive and transitive) as one up-set and one down-set per element.
class Poset {
 public:
  Poset() = default;

  /// Order generated by covering pairs (lower, upper); throws StructureError on
  /// duplicate names or when the closure is not antisymmetric.
  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<std::pair<Elem, Elem>>& covers);

  /// Order given in full: rows[a].test(b) iff a <= b. Throws StructureError if
  /// the relation is not reflexive, antisymmetric and transitive.
  static Poset from_relation(std::vector<std::string> names, std::vector<Bits> rows);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  const Bits& up(Elem a) const { return up_[a]; }
  const Bits& down(Elem a) const { return down_[a]; }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const;

 private:
  Poset(std::vector<std::string> names, std::vector<Bits> up);

  std::vector<std::string> names_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::unordered_map<std::string, Elem> index_;
};

/// Outcome of check_frame. On failure `witness` holds the subset lacking a
/// bound (no_meet / no_join) or the triple (a, b, c) for which
/// a ∧ (b ∨ c) = lhs differs from (a ∧ b) ∨ (a ∧ c) = rhs.
struct FrameReport {
  enum class Violation { none, no_meet, no_join, not_distributive };
  Violation violation = Violation::none;
  std::vector<Elem> witness;
  Elem lhs = 0;
  Elem rhs = 0;
  std::string message;

  bool valid() const { return violation == Violation::none; }
};

FrameReport check_frame(const Poset& p);

/// Finite frame: a distributive lattice with cached meet and join tables.
/// Copies share the immutable underlying data.
class Frame {
 public:
  Frame() = default;

  /// Validates with check_frame and throws FrameError carrying the report
  /// message when the poset is not a frame.
  static Frame from_poset(Poset p, std::string name = {});

  /// Frame whose tables are known by construction (presented frames). The
  /// lattice and distributive laws are scanned when the frame is small enough
  /// for a cubic scan; an InternalError is raised on a failed scan.
  static Frame from_lattice(Poset p, std::vector<Elem> meet, std::vector<Elem> join,
                            std::string name = {});

  const std::string& name() const { return d_->name; }
  std::size_t size() const { return d_->poset.size(); }
  const Poset& poset() const { return d_->poset; }
  const std::string& label(Elem e) const { return d_->poset.name(e); }
  std::optional<Elem> find(std::string_view name) const { return d_->poset.find(name); }
  /// Element by name; DomainError if absent.
  Elem at(std::string_view name) const;

  Elem top() const { return d_->top; }
  Elem bottom() const { return d_->bottom; }
  bool leq(Elem a, Elem b) const { return d_->poset.leq(a, b); }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return d_->meet[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return d_->join[a * size() + b]; }
  const Bits& up(Elem a) const { return d_->poset.up(a); }
  const Bits& down(Elem a) const { return d_->poset.down(a); }

  /// Greatest lower bound; meet of the empty set is top. DomainError on
  /// elements outside the frame.
  Elem meet(std::span<const Elem> s) const;
  /// Least upper bound; join of the empty set is bottom.
  Elem join(std::span<const Elem> s) const;
  Elem join(const Bits& s) const;

  bool contains(Elem e) const { return e < size(); }
  void require(Elem e) const;

  /// Same element count and identical order (labels ignored).
  bool same_structure(const Frame& o) const;
  bool shares_data(const Frame& o) const { return d_ == o.d_; }

 private:
  struct Data {
    std::string name;
    Poset poset;
    std::vector<Elem> meet;
    std::vector<Elem> join;
    Elem top = 0;
    Elem bottom = 0;
  };
  explicit Frame(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// Verifies the lattice laws of the cached tables (associativity,
/// commutativity, idempotence, absorption) and binary distributivity.
/// Returns an empty string when they all hold.
std::string scan_lattice_laws(const Frame& f);

/// Outcome of check_hom; `a`, `b` name the offending pair where relevant.
struct HomReport {
  enum class Violation { none, not_total, out_of_range, top, bottom, meet, join };
  Violation violation = Violation::none;
  Elem a = 0;
  Elem b = 0;
  std::string message;

  bool ok() const { return violation == Violation::none; }
};

/// Checks top, bottom, binary meets and binary joins, which on finite frames
/// is equivalent to preserving finite meets and arbitrary joins.
HomReport check_hom(const Frame& source, const Frame& target, std::span<const Elem> image);

/// Frame homomorphism. Also stands for a locale map in the opposite
/// direction, and for a point when the target is the two-element frame.
class FrameHom {
 public:
  FrameHom() = default;

  /// Validated construction; throws DomainError with the check_hom message.
  static FrameHom make(Frame source, Frame target, std::vector<Elem> image);
  /// No validation; for maps that are homomorphisms by construction.
  static FrameHom trusted(Frame source, Frame target, std::vector<Elem> image);
  static FrameHom identity(const Frame& f);

  const Frame& source() const { return source_; }
  const Frame& target() const { return target_; }
  const std::vector<Elem>& image() const { return image_; }
  Elem operator()(Elem e) const { return image_[e]; }

  /// The composite `next ∘ this`.
  FrameHom then(const FrameHom& next) const;

  bool operator==(const FrameHom& o) const { return image_ == o.image_; }
  auto operator<=>(const FrameHom& o) const { return image_ <=> o.image_; }

 private:
  FrameHom(Frame source, Frame target, std::vector<Elem> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

  Frame source_;
  Frame target_;
  std::vector<Elem> image_;
};

using Point = FrameHom;

/// Every frame homomorphism source -> target, lexicographic in the image.
std::vector<FrameHom> homs(const Frame& source, const Frame& target);

/// Every point of f (homomorphism into the two-element frame), lexicographic
/// in the image.
std::vector<Point> points(const Frame& f);

/// p <= q pointwise. DomainError if the sources differ.
bool specialization_leq(const Point& p, const Point& q);

/// Closure of m under finite joins, including the empty join.
ElemSet directify(const Frame& f, std::span<const Elem> m);

/// Order isomorphism a -> b if one exists. Throws ResourceError beyond `cap`
/// elements since the search is exponential.
std::optional<std::vector<Elem>> find_isomorphism(const Frame& a, const Frame& b,
                                                  std::size_t cap = 12);

// Built-in frames.

/// The two-element frame {bot < top}; opens of the one-point locale.
Frame terminal();
/// {bot < w < top}; the generic open is labelled "w".
Frame sierpinski();
Elem sierpinski_generic_open();
/// The four-element Boolean algebra {bot, a, b, top}.
Frame boolean_square();
/// The n-element chain; chain(1) is the one-element (trivial) frame.
Frame chain(std::size_t n);

/// The non-distributive five-element lattices.
Poset m3_poset();
Poset n5_poset();

/// Named built-in poset for the CLI: terminal, sierpinski, diamond,
/// chainN, m3, n5.
std::optional<Poset> builtin_poset(std::string_view name);

/// One representative of every frame with at most max_size elements up to
/// isomorphism, in increasing size.
std::vector<Frame> frames_up_to(std::size_t max_size);

}  // namespace pointless
