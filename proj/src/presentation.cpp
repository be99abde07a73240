#include "pointless/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "pointless/frame_io.hpp"

namespace pointless {

// ---------------------------------------------------------------- GenSemilattice

GenSemilattice::GenSemilattice(std::vector<std::string> names, std::vector<Elem> meet, Elem top)
    : names_(std::move(names)), meet_(std::move(meet)), top_(top) {
  const std::size_t n = names_.size();
  down_.assign(n, Bits(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      if (meet_[x * n + a] == x) down_[a].set(x);
  for (Elem a = 0; a < n; ++a) index_.emplace(names_[a], a);
}

GenSemilattice GenSemilattice::from_table(std::vector<std::string> names, std::vector<Elem> meet,
                                          Elem top) {
  const std::size_t n = names.size();
  if (n == 0) throw StructureError("a generator semilattice needs at least its top");
  if (meet.size() != n * n) throw StructureError("meet table has the wrong size");
  if (top >= n) throw StructureError("top is not an element");
  std::unordered_set<std::string> seen;
  for (const auto& s : names)
    if (!seen.insert(s).second) throw StructureError("duplicate generator '" + s + "'");
  auto m = [&](Elem a, Elem b) { return meet[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    if (m(a, a) != a) throw StructureError("meet is not idempotent at " + names[a]);
    if (m(a, top) != a) throw StructureError(names[top] + " is not a top: fails at " + names[a]);
    for (Elem b = 0; b < n; ++b) {
      if (m(a, b) >= n) throw StructureError("meet table entry out of range");
      if (m(a, b) != m(b, a))
        throw StructureError("meet is not commutative at " + names[a] + ", " + names[b]);
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (m(a, m(b, c)) != m(m(a, b), c))
          throw StructureError("meet is not associative at " + names[a] + ", " + names[b] + ", " +
                               names[c]);
  return GenSemilattice(std::move(names), std::move(meet), top);
}

GenSemilattice GenSemilattice::of_frame(const Frame& f) {
  const std::size_t n = f.size();
  std::vector<Elem> meet(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) meet[a * n + b] = f.meet(a, b);
  return GenSemilattice(f.poset().names(), std::move(meet), f.top());
}

GenSemilattice GenSemilattice::of_frame_joins(const Frame& f) {
  const std::size_t n = f.size();
  std::vector<Elem> meet(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) meet[a * n + b] = f.join(a, b);
  return GenSemilattice(f.poset().names(), std::move(meet), f.bottom());
}

GenSemilattice GenSemilattice::product(const GenSemilattice& left, const GenSemilattice& right) {
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  const std::size_t n = nl * nr;
  std::vector<std::string> names(n);
  for (Elem x = 0; x < nl; ++x)
    for (Elem y = 0; y < nr; ++y) names[x * nr + y] = left.name(x) + "*" + right.name(y);
  std::vector<Elem> meet(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      meet[a * n + b] = left.meet(a / nr, b / nr) * nr + right.meet(a % nr, b % nr);
  return GenSemilattice(std::move(names), std::move(meet), left.top() * nr + right.top());
}

GenSemilattice GenSemilattice::free_on(const std::vector<std::string>& symbols) {
  const std::size_t k = symbols.size();
  if (k > 16) throw ResourceError("free semilattice on too many symbols", k);
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names(n);
  for (Elem s = 0; s < n; ++s) {
    if (s == 0) {
      names[s] = "top";
      continue;
    }
    std::string nm;
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1) nm += (nm.empty() ? "" : "&") + symbols[i];
    names[s] = nm;
  }
  std::vector<Elem> meet(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) meet[a * n + b] = a | b;
  return GenSemilattice(std::move(names), std::move(meet), 0);
}

std::optional<Elem> GenSemilattice::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(GenSemilattice gens, std::vector<CoverageInstance> instances,
                           Stability stability)
    : gens_(std::move(gens)), instances_(std::move(instances)) {
  const std::size_t n = gens_.size();
  for (const auto& inst : instances_) {
    if (inst.target >= n) throw DomainError("coverage target is not a generator");
    for (Elem c : inst.cover)
      if (c >= n) throw DomainError("coverage member is not a generator");
  }

  struct Key {
    Elem target;
    Bits cover;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.cover.hash() * 31 + k.target; }
  };
  std::unordered_set<Key, KeyHash> seen;

  auto add = [&](Elem target, Bits cover) {
    // A rule whose target lies below a cover member never adds anything to a
    // downset.
    bool trivial = false;
    cover.for_each([&](Elem c) { trivial = trivial || gens_.leq(target, c); });
    if (trivial) return;
    Key k{target, cover};
    if (!seen.insert(k).second) return;
    rules_.push_back(Rule{target, std::move(cover), gens_.down(target)});
  };

  for (const auto& inst : instances_) {
    if (stability == Stability::already_stable) {
      Bits cover(n);
      for (Elem c : inst.cover) cover.set(c);
      add(inst.target, std::move(cover));
      continue;
    }
    for (Elem g = 0; g < n; ++g) {
      Bits cover(n);
      for (Elem c : inst.cover) cover.set(gens_.meet(g, c));
      add(gens_.meet(g, inst.target), std::move(cover));
    }
  }

  by_member_.assign(n, {});
  for (std::size_t r = 0; r < rules_.size(); ++r)
    rules_[r].cover.for_each([&](Elem c) { by_member_[c].push_back(r); });
}

// ---------------------------------------------------------------- downsets

Bits down_closure(const GenSemilattice& g, const Bits& s) {
  Bits r(g.size());
  s.for_each([&](Elem x) { r |= g.down(x); });
  return r;
}

bool is_downset(const GenSemilattice& g, const Bits& s) {
  bool ok = true;
  s.for_each([&](Elem x) { ok = ok && g.down(x).is_subset_of(s); });
  return ok;
}

bool is_c_ideal(const Presentation& p, const Bits& d) {
  const auto& g = p.gens();
  if (!is_downset(g, d)) return false;
  for (const auto& inst : p.instances()) {
    for (Elem h = 0; h < g.size(); ++h) {
      bool covered = true;
      for (Elem c : inst.cover) covered = covered && d.test(g.meet(h, c));
      if (covered && !d.test(g.meet(h, inst.target))) return false;
    }
  }
  return true;
}

Bits one_step(const Presentation& p, const Bits& d) {
  Bits r = d;
  for (const auto& rule : p.rules())
    if (rule.cover.is_subset_of(d)) r |= rule.target_down;
  return r;
}

namespace {

class Worklist {
 public:
  Worklist(const Presentation& p, Bits start) : p_(p), r_(std::move(start)) { queue_.reserve(p.size()); }

  void add(const Bits& s) {
    r_.merge(s, [&](Elem x) { queue_.push_back(x); });
  }

  void fire_if_ready(const Presentation::Rule& rule) {
    if (r_.test(rule.target)) return;
    if (rule.cover.is_subset_of(r_)) add(rule.target_down);
  }

  Bits run() {
    while (!queue_.empty()) {
      Elem x = queue_.back();
      queue_.pop_back();
      for (std::size_t idx : p_.rules_with_member(x)) fire_if_ready(p_.rules()[idx]);
    }
    return std::move(r_);
  }

 private:
  const Presentation& p_;
  Bits r_;
  std::vector<Elem> queue_;
};

}  // namespace

Bits saturate(const Presentation& p, const Bits& d) {
  Worklist w(p, down_closure(p.gens(), d));
  for (const auto& rule : p.rules()) w.fire_if_ready(rule);
  return w.run();
}

Bits saturate_from(const Presentation& p, const Bits& closed, const Bits& extra) {
  Worklist w(p, closed);
  w.add(down_closure(p.gens(), extra));
  return w.run();
}

Bits saturate_naive(const Presentation& p, const Bits& d) {
  Bits cur = down_closure(p.gens(), d);
  for (;;) {
    Bits next = one_step(p, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::size_t stabilization_depth(const Presentation& p, const Bits& d) {
  Bits cur = d;
  for (std::size_t n = 0;; ++n) {
    Bits next = one_step(p, cur);
    if (next == cur) return n;
    cur = std::move(next);
  }
}

std::vector<Bits> all_downsets(const GenSemilattice& g, std::size_t cap) {
  const std::size_t n = g.size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return g.down(a).count() < g.down(b).count(); });
  std::vector<Bits> out;
  Bits cur(n);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      if (out.size() >= cap) throw ResourceError("downset enumeration cap exceeded", out.size());
      out.push_back(cur);
      return;
    }
    Elem x = order[i];
    go(i + 1);
    Bits below = g.down(x);
    below.reset(x);
    if (below.is_subset_of(cur)) {
      cur.set(x);
      go(i + 1);
      cur.reset(x);
    }
  };
  go(0);
  return out;
}

// ---------------------------------------------------------------- PresentedFrame

PresentedFrame PresentedFrame::build(Presentation p, std::size_t cap, std::string name) {
  const auto& g = p.gens();
  const std::size_t n = g.size();

  std::vector<Bits> found{saturate(p, Bits(n))};
  std::unordered_map<Bits, Elem, BitsHash> seen{{found[0], 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < n; ++x) {
      if (found[i].test(x)) continue;
      Bits j = saturate_from(p, found[i], g.down(x));
      if (seen.emplace(j, found.size()).second) {
        found.push_back(std::move(j));
        if (found.size() > cap)
          throw ResourceError("C-ideal count exceeds the cap of " + std::to_string(cap), found.size());
      }
    }
  }

  // Ordered by size then content: bottom first, top last, and any ideal
  // precedes its proper supersets.
  std::sort(found.begin(), found.end(), [](const Bits& a, const Bits& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });

  PresentedFrame pf;
  const std::size_t m = found.size();
  for (Elem u = 0; u < m; ++u) pf.index_.emplace(found[u], u);

  const Bits& bottom = found.front();
  std::vector<std::string> names(m);
  std::unordered_set<std::string> used;
  for (Elem u = 0; u < m; ++u) {
    if (u == 0) {
      names[u] = "0";
    } else {
      Bits diff = found[u].minus(bottom);
      std::string nm;
      diff.for_each([&](Elem x) {
        bool maximal = true;
        diff.for_each([&](Elem y) { maximal = maximal && (y == x || !g.leq(x, y)); });
        if (maximal) nm += (nm.empty() ? "" : "+") + g.name(x);
      });
      names[u] = nm;
    }
    if (!used.insert(names[u]).second) names[u] += "#" + std::to_string(u);
  }

  std::vector<Bits> rows(m, Bits(m));
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a; b < m; ++b)
      if (found[a].is_subset_of(found[b])) rows[a].set(b);
  std::vector<Bits> cols(m, Bits(m));
  for (Elem a = 0; a < m; ++a) rows[a].for_each([&](Elem b) { cols[b].set(a); });

  std::vector<Elem> meet(m * m), join(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a; b < m; ++b) {
      // With the size ordering the greatest lower bound is the last common
      // lower bound and the least upper bound the first common upper bound.
      meet[a * m + b] = meet[b * m + a] = (cols[a] & cols[b]).last();
      join[a * m + b] = join[b * m + a] = (rows[a] & rows[b]).first();
    }

  pf.ideals_ = std::move(found);
  pf.embedding_.resize(n);
  for (Elem x = 0; x < n; ++x) pf.embedding_[x] = pf.index_.at(saturate(p, g.down(x)));
  pf.frame_ = Frame::from_lattice(Poset::from_relation(std::move(names), std::move(rows)),
                                  std::move(meet), std::move(join), std::move(name));
  pf.p_ = std::move(p);
  return pf;
}

std::optional<Elem> PresentedFrame::find(const Bits& ideal) const {
  auto it = index_.find(ideal);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PresentedFrame::generated_by(const Bits& downset) const {
  return index_.at(saturate(p_, downset));
}

AssignmentResult eval_assignment(const PresentedFrame& pf, const Frame& target,
                                 std::span<const Elem> assignment) {
  const auto& g = pf.presentation().gens();
  const std::size_t n = g.size();
  if (assignment.size() != n)
    throw DomainError("assignment has " + std::to_string(assignment.size()) + " entries for " +
                      std::to_string(n) + " generators");
  for (Elem x = 0; x < n; ++x) target.require(assignment[x]);

  AssignmentResult result;
  auto fail = [&](AssignmentViolation v) {
    result.violation = std::move(v);
    return result;
  };
  if (assignment[g.top()] != target.top())
    return fail({AssignmentViolation::Kind::top, g.top(), 0, 0,
                 "top generator " + g.name(g.top()) + " is not sent to top"});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (assignment[g.meet(a, b)] != target.meet(assignment[a], assignment[b]))
        return fail({AssignmentViolation::Kind::meet, a, b, 0,
                     "meet of " + g.name(a) + " and " + g.name(b) + " is not preserved"});
  const auto& instances = pf.presentation().instances();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    Elem rhs = target.bottom();
    for (Elem c : inst.cover) rhs = target.join(rhs, assignment[c]);
    if (!target.leq(assignment[inst.target], rhs)) {
      std::string cover;
      for (Elem c : inst.cover) cover += " " + g.name(c);
      return fail({AssignmentViolation::Kind::cover, inst.target, 0, i,
                   "instance " + g.name(inst.target) + " |" + cover + " fails: " +
                       target.label(assignment[inst.target]) + " is not below " + target.label(rhs)});
    }
  }

  std::vector<Elem> image(pf.size());
  for (Elem u = 0; u < pf.size(); ++u) {
    Elem v = target.bottom();
    pf.ideal(u).for_each([&](Elem x) { v = target.join(v, assignment[x]); });
    image[u] = v;
  }
  result.hom = FrameHom::trusted(pf.frame(), target, std::move(image));
  return result;
}

// ---------------------------------------------------------------- text format

Presentation parse_presentation_text(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> index;
  struct PendingMeet {
    std::string a, b, c;
    std::size_t line;
  };
  struct PendingCover {
    std::string target;
    std::vector<std::string> members;
    std::size_t line;
  };
  std::vector<PendingMeet> meets;
  std::vector<PendingCover> covers;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<std::string> t;
    for (std::string w; ss >> w;) t.push_back(w);
    if (t.empty()) continue;
    if (t[0] == "gens") {
      if (t.size() < 2) throw ParseError(lineno, "expected 'gens <id>...'");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] == "|") throw ParseError(lineno, "'|' is not a generator name");
        if (!index.emplace(t[i], names.size()).second)
          throw ParseError(lineno, "duplicate generator '" + t[i] + "'");
        names.push_back(t[i]);
      }
    } else if (t[0] == "meet") {
      if (t.size() != 4) throw ParseError(lineno, "expected 'meet <a> <b> <c>'");
      meets.push_back({t[1], t[2], t[3], lineno});
    } else if (t[0] == "cover") {
      if (t.size() < 3 || t[2] != "|") throw ParseError(lineno, "expected 'cover <target> | <member>...'");
      covers.push_back({t[1], {t.begin() + 3, t.end()}, lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + t[0] + "'");
    }
  }
  const std::size_t n = names.size();
  if (n == 0) throw ParseError(lineno, "no generators declared");

  auto lookup = [&](const std::string& s, std::size_t ln) {
    auto it = index.find(s);
    if (it == index.end()) throw ParseError(ln, "unknown generator '" + s + "'");
    return it->second;
  };
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> table(n * n, unset);
  for (Elem a = 0; a < n; ++a) table[a * n + a] = a;
  for (const auto& m : meets) {
    Elem a = lookup(m.a, m.line), b = lookup(m.b, m.line), c = lookup(m.c, m.line);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      Elem& slot = table[x * n + y];
      if (slot != unset && slot != c)
        throw ParseError(m.line, "conflicting meet for " + m.a + ", " + m.b);
      slot = c;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (table[a * n + b] == unset)
        throw ParseError(lineno, "meet of " + names[a] + " and " + names[b] + " is not given");
  std::optional<Elem> top;
  for (Elem t = 0; t < n && !top; ++t) {
    bool identity = true;
    for (Elem a = 0; a < n; ++a) identity = identity && table[t * n + a] == a;
    if (identity) top = t;
  }
  if (!top) throw StructureError("no generator acts as the top (meet identity)");
  auto gens = GenSemilattice::from_table(names, std::move(table), *top);

  std::vector<CoverageInstance> instances;
  for (const auto& c : covers) {
    CoverageInstance inst;
    inst.target = lookup(c.target, c.line);
    for (const auto& m : c.members) inst.cover.push_back(lookup(m, c.line));
    instances.push_back(std::move(inst));
  }
  return Presentation(std::move(gens), std::move(instances));
}

Presentation parse_presentation_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation_text(in);
}

}  // namespace pointless
