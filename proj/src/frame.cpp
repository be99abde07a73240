#include "pointless/frame.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pointless {

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> names, std::vector<Bits> up)
    : names_(std::move(names)), up_(std::move(up)) {
  const std::size_t n = names_.size();
  down_.assign(n, Bits(n));
  for (Elem a = 0; a < n; ++a) up_[a].for_each([&](Elem b) { down_[b].set(a); });
  for (Elem a = 0; a < n; ++a) index_.emplace(names_[a], a);
}

namespace {

void check_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string, Elem> seen;
  for (Elem i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw StructureError("empty element name at position " + std::to_string(i));
    if (!seen.emplace(names[i], i).second)
      throw StructureError("duplicate element '" + names[i] + "'");
  }
}

void check_antisymmetric(const std::vector<std::string>& names, const std::vector<Bits>& rows) {
  for (Elem a = 0; a < rows.size(); ++a)
    for (Elem b = a + 1; b < rows.size(); ++b)
      if (rows[a].test(b) && rows[b].test(a))
        throw StructureError("order is not antisymmetric: " + names[a] + " <= " + names[b] +
                             " and " + names[b] + " <= " + names[a]);
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<Elem, Elem>>& covers) {
  check_names(names);
  const std::size_t n = names.size();
  std::vector<Bits> rows(n, Bits(n));
  for (Elem a = 0; a < n; ++a) rows[a].set(a);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw StructureError("cover refers to an unknown element");
    rows[lo].set(hi);
  }
  // Warshall on bit rows.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  check_antisymmetric(names, rows);
  return Poset(std::move(names), std::move(rows));
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<Bits> rows) {
  check_names(names);
  const std::size_t n = names.size();
  if (rows.size() != n) throw StructureError("relation has the wrong number of rows");
  for (Elem a = 0; a < n; ++a) {
    if (rows[a].width() != n) throw StructureError("relation row has the wrong width");
    if (!rows[a].test(a)) throw StructureError("order is not reflexive at " + names[a]);
  }
  check_antisymmetric(names, rows);
  for (Elem a = 0; a < n; ++a) {
    bool bad = false;
    Elem via = 0;
    rows[a].for_each([&](Elem b) {
      if (!bad && !rows[b].is_subset_of(rows[a])) {
        bad = true;
        via = b;
      }
    });
    if (bad) throw StructureError("order is not transitive through " + names[a] + " <= " + names[via]);
  }
  return Poset(std::move(names), std::move(rows));
}

std::optional<Elem> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Elem, Elem>> Poset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    up_[a].for_each([&](Elem b) {
      if (b == a) return;
      // a < b is a cover iff no c with a < c < b
      Bits between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    });
  }
  return out;
}

// ---------------------------------------------------------------- lattice tables

namespace {

std::optional<Elem> greatest_of(const Poset& p, const Bits& set, bool use_down) {
  std::optional<Elem> r;
  set.for_each([&](Elem m) {
    if (!r && (use_down ? p.down(m) : p.up(m)) == set) r = m;
  });
  return r;
}

struct Tables {
  std::vector<Elem> meet;
  std::vector<Elem> join;
  Elem top = 0;
  Elem bottom = 0;
};

// Fills report on failure.
std::optional<Tables> lattice_tables(const Poset& p, FrameReport& report) {
  const std::size_t n = p.size();
  Tables t;
  const Bits all = Bits::full(n);
  auto top = greatest_of(p, all, true);
  if (!top) {
    report.violation = FrameReport::Violation::no_meet;
    report.message = "the empty set has no meet (no top element)";
    return std::nullopt;
  }
  auto bottom = greatest_of(p, all, false);
  if (!bottom) {
    report.violation = FrameReport::Violation::no_join;
    report.message = "the empty set has no join (no bottom element)";
    return std::nullopt;
  }
  t.top = *top;
  t.bottom = *bottom;
  t.meet.resize(n * n);
  t.join.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto m = greatest_of(p, p.down(a) & p.down(b), true);
      if (!m) {
        report.violation = FrameReport::Violation::no_meet;
        report.witness = {a, b};
        report.message = "{" + p.name(a) + ", " + p.name(b) + "} has no meet";
        return std::nullopt;
      }
      t.meet[a * n + b] = t.meet[b * n + a] = *m;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto j = greatest_of(p, p.up(a) & p.up(b), false);
      if (!j) {
        report.violation = FrameReport::Violation::no_join;
        report.witness = {a, b};
        report.message = "{" + p.name(a) + ", " + p.name(b) + "} has no join";
        return std::nullopt;
      }
      t.join[a * n + b] = t.join[b * n + a] = *j;
    }
  }
  return t;
}

// In a finite lattice binary distributivity gives distributivity over every
// (finite, hence arbitrary) join.
bool distributivity_scan(const Poset& p, const std::vector<Elem>& meet,
                         const std::vector<Elem>& join, FrameReport& report) {
  const std::size_t n = p.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = meet[a * n + join[b * n + c]];
        Elem rhs = join[meet[a * n + b] * n + meet[a * n + c]];
        if (lhs != rhs) {
          report.violation = FrameReport::Violation::not_distributive;
          report.witness = {a, b, c};
          report.lhs = lhs;
          report.rhs = rhs;
          report.message = p.name(a) + " ∧ (" + p.name(b) + " ∨ " + p.name(c) + ") = " + p.name(lhs) +
                           " but (" + p.name(a) + " ∧ " + p.name(b) + ") ∨ (" + p.name(a) + " ∧ " +
                           p.name(c) + ") = " + p.name(rhs);
          return false;
        }
      }
  return true;
}

}  // namespace

FrameReport check_frame(const Poset& p) {
  FrameReport report;
  auto t = lattice_tables(p, report);
  if (!t) return report;
  distributivity_scan(p, t->meet, t->join, report);
  return report;
}

// ---------------------------------------------------------------- Frame

namespace {
constexpr std::size_t kLawScanLimit = 160;
}

Frame Frame::from_poset(Poset p, std::string name) {
  FrameReport report;
  auto t = lattice_tables(p, report);
  if (!t || !distributivity_scan(p, t->meet, t->join, report))
    throw FrameError("not a frame: " + report.message);
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->poset = std::move(p);
  d->meet = std::move(t->meet);
  d->join = std::move(t->join);
  d->top = t->top;
  d->bottom = t->bottom;
  Frame f(std::move(d));
  if (auto err = scan_lattice_laws(f); !err.empty()) throw InternalError(err);
  return f;
}

Frame Frame::from_lattice(Poset p, std::vector<Elem> meet, std::vector<Elem> join,
                          std::string name) {
  const std::size_t n = p.size();
  if (n == 0) throw FrameError("not a frame: the empty set has no meet (no top element)");
  if (meet.size() != n * n || join.size() != n * n)
    throw StructureError("lattice tables have the wrong size");
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->top = d->bottom = 0;
  for (Elem e = 0; e < n; ++e) {
    if (p.down(e).count() == n) d->top = e;
    if (p.up(e).count() == n) d->bottom = e;
  }
  d->poset = std::move(p);
  d->meet = std::move(meet);
  d->join = std::move(join);
  Frame f(std::move(d));
  if (n <= kLawScanLimit) {
    if (auto err = scan_lattice_laws(f); !err.empty()) throw InternalError(err);
  }
  return f;
}

std::string scan_lattice_laws(const Frame& f) {
  const std::size_t n = f.size();
  auto nm = [&](Elem e) { return f.label(e); };
  if (!f.leq(f.bottom(), f.top()) || f.down(f.top()).count() != n || f.up(f.bottom()).count() != n)
    return "top/bottom are not extremal";
  for (Elem a = 0; a < n; ++a) {
    if (f.meet(a, a) != a || f.join(a, a) != a) return "idempotence fails at " + nm(a);
    for (Elem b = 0; b < n; ++b) {
      if (f.meet(a, b) != f.meet(b, a) || f.join(a, b) != f.join(b, a))
        return "commutativity fails at " + nm(a) + ", " + nm(b);
      if (f.meet(a, f.join(a, b)) != a || f.join(a, f.meet(a, b)) != a)
        return "absorption fails at " + nm(a) + ", " + nm(b);
      if ((f.meet(a, b) == a) != f.leq(a, b)) return "meet disagrees with the order at " + nm(a) + ", " + nm(b);
      for (Elem c = 0; c < n; ++c) {
        if (f.meet(a, f.meet(b, c)) != f.meet(f.meet(a, b), c) ||
            f.join(a, f.join(b, c)) != f.join(f.join(a, b), c))
          return "associativity fails at " + nm(a) + ", " + nm(b) + ", " + nm(c);
        if (f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c)))
          return "distributivity fails at " + nm(a) + ", " + nm(b) + ", " + nm(c);
      }
    }
  }
  return {};
}

Elem Frame::at(std::string_view name) const {
  auto e = find(name);
  if (!e) throw DomainError("no element '" + std::string(name) + "' in frame " + this->name());
  return *e;
}

void Frame::require(Elem e) const {
  if (e >= size())
    throw DomainError("element index " + std::to_string(e) + " is not in frame " + name());
}

Elem Frame::meet(std::span<const Elem> s) const {
  Elem r = top();
  for (Elem e : s) {
    require(e);
    r = meet(r, e);
  }
  return r;
}

Elem Frame::join(std::span<const Elem> s) const {
  Elem r = bottom();
  for (Elem e : s) {
    require(e);
    r = join(r, e);
  }
  return r;
}

Elem Frame::join(const Bits& s) const {
  Elem r = bottom();
  s.for_each([&](Elem e) { r = join(r, e); });
  return r;
}

bool Frame::same_structure(const Frame& o) const {
  if (shares_data(o)) return true;
  if (size() != o.size()) return false;
  for (Elem a = 0; a < size(); ++a)
    if (up(a) != o.up(a)) return false;
  return true;
}

// ---------------------------------------------------------------- homomorphisms

HomReport check_hom(const Frame& source, const Frame& target, std::span<const Elem> image) {
  HomReport r;
  const std::size_t n = source.size();
  if (image.size() != n) {
    r.violation = HomReport::Violation::not_total;
    r.message = "map has " + std::to_string(image.size()) + " entries for " + std::to_string(n) +
                " source elements";
    return r;
  }
  for (Elem a = 0; a < n; ++a) {
    if (!target.contains(image[a])) {
      r.violation = HomReport::Violation::out_of_range;
      r.a = a;
      r.message = "image of " + source.label(a) + " is not an element of the target";
      return r;
    }
  }
  if (image[source.top()] != target.top()) {
    r.violation = HomReport::Violation::top;
    r.a = source.top();
    r.message = "top is not preserved: " + source.label(source.top()) + " -> " +
                target.label(image[source.top()]);
    return r;
  }
  if (image[source.bottom()] != target.bottom()) {
    r.violation = HomReport::Violation::bottom;
    r.a = source.bottom();
    r.message = "bottom is not preserved: " + source.label(source.bottom()) + " -> " +
                target.label(image[source.bottom()]);
    return r;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (image[source.meet(a, b)] != target.meet(image[a], image[b])) {
        r.violation = HomReport::Violation::meet;
        r.a = a;
        r.b = b;
        r.message = "meet of " + source.label(a) + ", " + source.label(b) + " is not preserved";
        return r;
      }
      if (image[source.join(a, b)] != target.join(image[a], image[b])) {
        r.violation = HomReport::Violation::join;
        r.a = a;
        r.b = b;
        r.message = "join of " + source.label(a) + ", " + source.label(b) + " is not preserved";
        return r;
      }
    }
  }
  return r;
}

FrameHom FrameHom::make(Frame source, Frame target, std::vector<Elem> image) {
  auto r = check_hom(source, target, image);
  if (!r.ok()) throw DomainError("not a frame homomorphism: " + r.message);
  return FrameHom(std::move(source), std::move(target), std::move(image));
}

FrameHom FrameHom::trusted(Frame source, Frame target, std::vector<Elem> image) {
  return FrameHom(std::move(source), std::move(target), std::move(image));
}

FrameHom FrameHom::identity(const Frame& f) {
  std::vector<Elem> img(f.size());
  for (Elem e = 0; e < f.size(); ++e) img[e] = e;
  return FrameHom(f, f, std::move(img));
}

FrameHom FrameHom::then(const FrameHom& next) const {
  if (!target_.same_structure(next.source_))
    throw DomainError("cannot compose: target and source frames differ");
  std::vector<Elem> img(image_.size());
  for (Elem e = 0; e < image_.size(); ++e) img[e] = next(image_[e]);
  return FrameHom(source_, next.target_, std::move(img));
}

std::vector<FrameHom> homs(const Frame& source, const Frame& target) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  std::vector<FrameHom> out;
  if (n == 0 || m == 0) return out;

  // Pairs (x, y) whose meet or join is e are checked once e and both of x, y
  // have images; each constraint fires when the last of its three elements is
  // assigned, in index order.
  struct Constraint {
    Elem x, y, result;
    bool is_meet;
  };
  std::vector<std::vector<Constraint>> at(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      for (bool is_meet : {true, false}) {
        Elem r = is_meet ? source.meet(x, y) : source.join(x, y);
        at[std::max({x, y, r})].push_back({x, y, r, is_meet});
      }
    }

  std::vector<Elem> image(n, 0);
  std::function<void(Elem)> go = [&](Elem e) {
    if (e == n) {
      out.push_back(FrameHom::trusted(source, target, image));
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      if (e == source.top() && v != target.top()) continue;
      if (e == source.bottom() && v != target.bottom()) continue;
      image[e] = v;
      bool ok = true;
      for (const auto& c : at[e]) {
        Elem want = c.is_meet ? target.meet(image[c.x], image[c.y]) : target.join(image[c.x], image[c.y]);
        if (image[c.result] != want) {
          ok = false;
          break;
        }
      }
      if (ok) go(e + 1);
    }
  };
  go(0);
  return out;
}

std::vector<Point> points(const Frame& f) {
  // Every point of a finite frame is x |-> [p <= x] for p the meet of its
  // filter, so candidates are indexed by p.
  static const Frame two = terminal();
  std::vector<Point> out;
  for (Elem p = 0; p < f.size(); ++p) {
    std::vector<Elem> img(f.size());
    for (Elem x = 0; x < f.size(); ++x) img[x] = f.leq(p, x) ? two.top() : two.bottom();
    if (check_hom(f, two, img).ok()) out.push_back(FrameHom::trusted(f, two, std::move(img)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool specialization_leq(const Point& p, const Point& q) {
  if (!p.source().same_structure(q.source()))
    throw DomainError("specialization order compares points of different locales");
  const Frame& t = p.target();
  for (Elem u = 0; u < p.source().size(); ++u)
    if (!t.leq(p(u), q(u))) return false;
  return true;
}

ElemSet directify(const Frame& f, std::span<const Elem> m) {
  Bits in(f.size());
  in.set(f.bottom());
  std::vector<Elem> frontier{f.bottom()};
  for (Elem e : m) f.require(e);
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem e : m) {
        Elem j = f.join(a, e);
        if (!in.test(j)) {
          in.set(j);
          next.push_back(j);
        }
      }
    frontier = std::move(next);
  }
  return in.indices();
}

std::optional<std::vector<Elem>> find_isomorphism(const Frame& a, const Frame& b, std::size_t cap) {
  const std::size_t n = a.size();
  if (n > cap || b.size() > cap)
    throw ResourceError("isomorphism search is capped at " + std::to_string(cap) + " elements",
                        std::max(n, b.size()));
  if (n != b.size()) return std::nullopt;
  std::vector<Elem> map(n, 0);
  Bits used(n);
  std::function<bool(Elem)> go = [&](Elem e) {
    if (e == n) return true;
    for (Elem v = 0; v < n; ++v) {
      if (used.test(v)) continue;
      if (a.up(e).count() != b.up(v).count() || a.down(e).count() != b.down(v).count()) continue;
      bool ok = true;
      for (Elem x = 0; x < e && ok; ++x)
        ok = a.leq(x, e) == b.leq(map[x], v) && a.leq(e, x) == b.leq(v, map[x]);
      if (!ok) continue;
      map[e] = v;
      used.set(v);
      if (go(e + 1)) return true;
      used.reset(v);
    }
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

// ---------------------------------------------------------------- built-ins

Frame terminal() { return chain(2); }

Frame sierpinski() {
  return Frame::from_poset(Poset::from_covers({"bot", "w", "top"}, {{0, 1}, {1, 2}}), "sierpinski");
}

Elem sierpinski_generic_open() { return 1; }

Frame boolean_square() {
  return Frame::from_poset(
      Poset::from_covers({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), "diamond");
}

namespace {

Poset chain_poset(std::size_t n) {
  if (n == 0) throw DomainError("chain length must be positive");
  if (n == 1) return Poset::from_covers({"pt"}, {});
  std::vector<std::string> names{"bot"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("c" + std::to_string(i));
  names.push_back("top");
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(std::move(names), covers);
}

}  // namespace

Frame chain(std::size_t n) {
  return Frame::from_poset(chain_poset(n), n == 2 ? "terminal" : "chain" + std::to_string(n));
}

Poset m3_poset() {
  return Poset::from_covers({"bot", "a", "b", "c", "top"},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Poset n5_poset() {
  return Poset::from_covers({"bot", "a", "b", "c", "top"}, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}});
}

std::optional<Poset> builtin_poset(std::string_view name) {
  if (name == "terminal" || name == "two") return chain_poset(2);
  if (name == "sierpinski") return sierpinski().poset();
  if (name == "diamond" || name == "boolean_square") return boolean_square().poset();
  if (name == "trivial") return chain_poset(1);
  if (name == "m3") return m3_poset();
  if (name == "n5") return n5_poset();
  if (name.starts_with("chain")) {
    auto digits = name.substr(5);
    if (digits.empty() || digits.size() > 3) return std::nullopt;
    std::size_t n = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n == 0) return std::nullopt;
    return chain_poset(n);
  }
  return std::nullopt;
}

std::vector<Frame> frames_up_to(std::size_t max_size) {
  std::vector<Frame> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    if (n <= 3) {
      out.push_back(chain(n));
      continue;
    }
    // Every finite lattice has a linear extension with bottom first and top
    // last, so enumerating relations among the middle elements that respect
    // index order reaches every isomorphism class.
    const std::size_t mid = n - 2;
    std::vector<std::pair<Elem, Elem>> slots;
    for (Elem i = 1; i <= mid; ++i)
      for (Elem j = i + 1; j <= mid; ++j) slots.emplace_back(i, j);
    std::vector<Frame> found;
    std::vector<std::string> names{"bot"};
    for (Elem i = 1; i <= mid; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("top");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Bits> rows(n, Bits(n));
      for (Elem i = 0; i < n; ++i) {
        rows[i].set(i);
        rows[0].set(i);
        rows[i].set(n - 1);
      }
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) rows[slots[s].first].set(slots[s].second);
      bool transitive = true;
      for (Elem i = 0; i < n && transitive; ++i)
        rows[i].for_each([&](Elem j) { transitive = transitive && rows[j].is_subset_of(rows[i]); });
      if (!transitive) continue;
      Poset p = Poset::from_relation(names, rows);
      if (!check_frame(p).valid()) continue;
      Frame f = Frame::from_poset(std::move(p));
      bool dup = false;
      for (const auto& g : found)
        if (find_isomorphism(f, g, 64)) {
          dup = true;
          break;
        }
      if (!dup) found.push_back(f);
    }
    // Chain first, then the rest in discovery order.
    std::stable_partition(found.begin(), found.end(), [&](const Frame& f) {
      for (Elem a = 0; a < f.size(); ++a)
        for (Elem b = 0; b < f.size(); ++b)
          if (!f.leq(a, b) && !f.leq(b, a)) return false;
      return true;
    });
    std::size_t k = 0;
    for (auto& f : found) {
      if (k == 0) {
        out.push_back(chain(n));
      } else {
        out.push_back(Frame::from_poset(f.poset(), "d" + std::to_string(n) + "_" + std::to_string(k)));
      }
      ++k;
    }
  }
  return out;
}

}  // namespace pointless
