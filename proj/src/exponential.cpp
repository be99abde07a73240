#include "pointless/exponential.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace pointless {

namespace {

std::string join_labels(const Frame& f, std::span<const Elem> es) {
  std::string out;
  for (Elem e : es) out += (out.empty() ? "" : ",") + f.label(e);
  return out;
}

std::string upset_label(const Frame& base, const Bits& s) {
  std::vector<Elem> members = s.indices();
  return "{" + join_labels(base, members) + "}";
}

Bits way_above(const WayBelowOracle& wb, Elem s) {
  const Frame& f = wb.frame();
  Bits out(f.size());
  for (Elem a = 0; a < f.size(); ++a)
    if (wb(s, a)) out.set(a);
  return out;
}

// Subsets of f (as masks) whose join is at least b.
std::vector<std::vector<Elem>> covers_of(const Frame& f, Elem b) {
  if (f.size() > 12) throw ResourceError("cover enumeration is capped at 12 elements", f.size());
  std::vector<std::vector<Elem>> out;
  for (std::uint32_t mask = 0; mask < (1u << f.size()); ++mask) {
    std::vector<Elem> s;
    for (Elem e = 0; e < f.size(); ++e)
      if (mask >> e & 1) s.push_back(e);
    if (f.leq(b, f.join(s))) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ Ω(Sᴬ)

SExpPresentation SExpPresentation::make(const WayBelowOracle& wb) {
  SExpPresentation rel;
  const Frame& a = wb.frame();
  rel.base = a;
  for (Elem s = 0; s < a.size(); ++s)
    for (Elem t = 0; t < a.size(); ++t)
      if (s != t && a.leq(s, t)) rel.r1.push_back({s, t});
  rel.r2.push_back({{}, a.bottom()});
  for (Elem s = 0; s < a.size(); ++s)
    for (Elem t = s + 1; t < a.size(); ++t) rel.r2.push_back({{s, t}, a.join(s, t)});
  for (Elem s = 0; s < a.size(); ++s) rel.r3.push_back({s, way_above(wb, s).indices()});
  return rel;
}

std::optional<std::string> check_sexp_assignment(const SExpPresentation& rel, const Frame& z,
                                                 std::span<const Elem> g) {
  const Frame& a = rel.base;
  if (g.size() != a.size()) return "assignment has the wrong length";
  for (const auto& r : rel.r1)
    if (!z.leq(g[r.upper], g[r.lower]))
      return "antitone relation fails for " + a.label(r.lower) + " <= " + a.label(r.upper);
  for (const auto& r : rel.r2) {
    std::vector<Elem> parts;
    for (Elem p : r.parts) parts.push_back(g[p]);
    if (!z.leq(z.meet(parts), g[r.join]))
      return "finite-join relation fails for {" + join_labels(a, r.parts) + "}";
  }
  for (const auto& r : rel.r3) {
    std::vector<Elem> above;
    for (Elem p : r.above) above.push_back(g[p]);
    if (!z.leq(g[r.s], z.join(above))) return "interpolation relation fails at " + a.label(r.s);
  }
  return std::nullopt;
}

SierpinskiExp SierpinskiExp::make(const Frame& base, std::size_t cap) {
  return make(WayBelowOracle::finite(base), cap);
}

SierpinskiExp SierpinskiExp::make(const WayBelowOracle& wb, std::size_t cap) {
  SierpinskiExp e;
  e.wb_ = wb;
  e.rel_ = SExpPresentation::make(wb);
  std::vector<CoverageInstance> instances;
  for (const auto& r : e.rel_.r3) instances.push_back({r.s, r.above});
  Presentation p(GenSemilattice::of_frame_joins(wb.frame()), std::move(instances));
  const std::string& bn = wb.frame().name();
  e.presented_ = PresentedFrame::build(std::move(p), cap, "S^" + (bn.empty() ? "A" : bn));
  return e;
}

SierpinskiExp sierpinski_exp(const Frame& base, std::size_t cap) { return SierpinskiExp::make(base, cap); }

Frame scott_oracle(const Frame& base) {
  const std::size_t n = base.size();
  if (n > 16) throw ResourceError("upper-set oracle is capped at 16 elements", n);
  std::vector<Bits> sets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Bits s(n);
    for (Elem e = 0; e < n; ++e)
      if (mask >> e & 1) s.set(e);
    bool upward = true;
    s.for_each([&](Elem e) { upward = upward && base.up(e).is_subset_of(s); });
    if (upward) sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const Bits& x, const Bits& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x < y;
  });
  std::vector<std::string> names;
  std::vector<Bits> rows(sets.size(), Bits(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    names.push_back(upset_label(base, sets[i]));
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (sets[i].is_subset_of(sets[j])) rows[i].set(j);
  }
  return Frame::from_poset(Poset::from_relation(std::move(names), std::move(rows)),
                           "Up(" + base.name() + ")");
}

Elem scott_principal(const Frame& oracle, const Frame& base, Elem s) {
  base.require(s);
  return oracle.at(upset_label(base, base.up(s)));
}

IsoCheck exp_iso_check(const SierpinskiExp& e) {
  IsoCheck out;
  const Frame& base = e.base();
  Frame oracle = scott_oracle(base);
  std::vector<Elem> g(base.size());
  for (Elem s = 0; s < base.size(); ++s) {
    auto target = oracle.find(upset_label(base, way_above(e.way_below(), s)));
    if (!target) {
      out.mismatch = "the way-above set of " + base.label(s) + " is not an upper set";
      return out;
    }
    g[s] = *target;
  }
  auto r = eval_assignment(e.presented(), oracle, g);
  if (!r.ok()) {
    out.mismatch = "assignment rejected: " + r.violation->message;
    return out;
  }
  const FrameHom& h = *r.hom;
  if (e.size() != oracle.size()) {
    out.mismatch = "sizes differ: " + std::to_string(e.size()) + " vs " + std::to_string(oracle.size());
    return out;
  }
  for (Elem x = 0; x < e.size(); ++x)
    for (Elem y = 0; y < e.size(); ++y)
      if (e.frame().leq(x, y) != oracle.leq(h(x), h(y))) {
        out.mismatch = "order differs at " + e.frame().label(x) + ", " + e.frame().label(y);
        return out;
      }
  out.ok = true;
  out.iso = h;
  return out;
}

FrameHom curry(const SierpinskiExp& e, const TensorFrame& za, Elem u) {
  if (!za.right().same_structure(e.base()))
    throw DomainError("curry: the tensor's right factor is not the exponent");
  std::vector<Elem> g(e.base().size());
  for (Elem s = 0; s < g.size(); ++s) g[s] = big_f(za, e.way_below(), s, u);
  if (auto bad = check_sexp_assignment(e.relations(), za.left(), g))
    throw InternalError("curry of " + za.frame().label(u) + ": " + *bad);
  auto r = eval_assignment(e.presented(), za.left(), g);
  if (!r.ok()) throw InternalError("curry of " + za.frame().label(u) + ": " + r.violation->message);
  return *r.hom;
}

Elem uncurry(const SierpinskiExp& e, const TensorFrame& za, const FrameHom& h) {
  if (!h.source().same_structure(e.frame()) || !h.target().same_structure(za.left()))
    throw DomainError("uncurry: homomorphism does not match the exponential and tensor");
  std::vector<std::pair<Elem, Elem>> rects;
  for (Elem s = 0; s < e.base().size(); ++s) rects.emplace_back(h(e.generator(s)), s);
  return join_of_rects(za, rects);
}

TensorFrame evaluation_tensor(const SierpinskiExp& e, std::size_t cap) {
  return TensorFrame::make(e.frame(), e.base(), cap);
}

Elem evaluation_open(const SierpinskiExp& e, const TensorFrame& ea) {
  return uncurry(e, ea, FrameHom::identity(e.frame()));
}

Point exp_point(const SierpinskiExp& e, Elem a) {
  e.base().require(a);
  TensorFrame za = TensorFrame::make(terminal(), e.base());
  return curry(e, za, za.rect(za.left().top(), a));
}

UniversalReport verify_universal(const SierpinskiExp& e, const std::vector<Frame>& zs) {
  UniversalReport rep;
  std::vector<TensorFrame> tensors;
  std::vector<std::vector<FrameHom>> curried(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const Frame& z = zs[i];
    tensors.push_back(TensorFrame::make(z, e.base()));
    const TensorFrame& za = tensors.back();
    std::vector<FrameHom> hs = homs(e.frame(), z);
    UniversalCase c{z.name(), za.size(), hs.size(), false};
    bool good = za.size() == hs.size();
    if (!good)
      rep.fail("Z=" + z.name() + ": " + std::to_string(za.size()) + " opens of Z x A but " +
               std::to_string(hs.size()) + " homomorphisms");
    std::set<std::vector<Elem>> seen;
    for (Elem u = 0; u < za.size(); ++u) {
      FrameHom h = curry(e, za, u);
      if (uncurry(e, za, h) != u) {
        good = false;
        rep.fail("Z=" + z.name() + ": uncurry(curry(" + za.frame().label(u) + ")) differs");
      }
      if (!std::binary_search(hs.begin(), hs.end(), h)) {
        good = false;
        rep.fail("Z=" + z.name() + ": curry(" + za.frame().label(u) + ") is not among the homomorphisms");
      }
      if (!seen.insert(h.image()).second) {
        good = false;
        rep.fail("Z=" + z.name() + ": curry is not injective");
      }
      curried[i].push_back(std::move(h));
    }
    for (const auto& h : hs) {
      Elem u = uncurry(e, za, h);
      if (!(curried[i][u] == h)) {
        good = false;
        rep.fail("Z=" + z.name() + ": curry(uncurry(h)) differs from h");
      }
    }
    c.bijection = good;
    rep.cases.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j)
      for (const auto& g : homs(zs[i], zs[j])) {
        FrameHom pm = product_map(g, tensors[i], tensors[j]);
        for (Elem u = 0; u < tensors[i].size(); ++u) {
          ++rep.squares;
          if (!(curried[j][pm(u)] == curried[i][u].then(g))) {
            std::ostringstream msg;
            msg << "naturality square fails for Z=" << zs[i].name() << " -> Z'=" << zs[j].name()
                << " at u=" << tensors[i].frame().label(u);
            rep.fail(msg.str());
          }
        }
      }
  return rep;
}

LemmaReport check_lemmas(const SierpinskiExp& e) {
  LemmaReport rep;
  const Frame& base = e.base();
  const Frame& ef = e.frame();
  const std::size_t n = base.size();
  TensorFrame ea = evaluation_tensor(e);
  const Elem ev = evaluation_open(e, ea);
  TensorFrame ta = TensorFrame::make(terminal(), base);
  std::vector<Point> pts;
  for (Elem a = 0; a < n; ++a) pts.push_back(curry(e, ta, ta.rect(ta.left().top(), a)));
  const Elem top2 = ta.left().top();
  auto in = [&](Elem a, Elem d) { return pts[a](d) == top2; };

  std::vector<Point> all = points(ef);
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (!(all == sorted)) rep.fail("the points of the exponential are not exactly the p_a");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (specialization_leq(pts[a], pts[b]) != base.leq(a, b))
        rep.fail("specialization order differs at " + base.label(a) + ", " + base.label(b));
      if (base.leq(a, b))
        for (Elem d = 0; d < ef.size(); ++d)
          if (in(a, d) && !in(b, d)) rep.fail("open " + ef.label(d) + " is not upward closed");
    }

  std::vector<std::vector<std::vector<Elem>>> covers(n);
  for (Elem a = 0; a < n; ++a) covers[a] = covers_of(base, a);
  for (Elem a = 0; a < n; ++a) {
    Elem reach = base.bottom();
    for (Elem d = 0; d < ef.size(); ++d) {
      if (!in(a, d)) continue;
      for (Elem a2 = 0; a2 < n; ++a2) {
        if (!ea.contains(ev, d, a2)) continue;
        ++rep.triples;
        reach = base.join(reach, a2);
        if (!base.leq(a2, a))
          rep.fail("p_" + base.label(a) + " in " + ef.label(d) + " but " + base.label(a2) + " is not below it");
        for (const auto& c : covers[a]) {
          ++rep.covers;
          bool found = false;
          for (Elem b : directify(base, c)) found = found || (in(b, d) && base.leq(a2, b));
          if (!found) rep.fail("no finite join of a cover of " + base.label(a) + " lies in " + ef.label(d));
        }
      }
    }
    if (reach != a) rep.fail("the opens approximating " + base.label(a) + " do not join to it");
  }

  // Directed families of points and their pointwise joins.
  for (std::uint32_t mask = 0; mask < (1u << std::min<std::size_t>(n, 12)); ++mask) {
    std::vector<Elem> m;
    for (Elem a = 0; a < n; ++a)
      if (mask >> a & 1) m.push_back(a);
    ElemSet d = directify(base, m);
    const Elem j = base.join(d);
    ++rep.directed_families;
    for (Elem o = 0; o < ef.size(); ++o) {
      bool some = false;
      for (Elem b : d) some = some || in(b, o);
      if (some != in(j, o)) rep.fail("directed join of points is not pointwise at " + ef.label(o));
    }
    for (const auto& q : all) {
      bool upper = true;
      for (Elem b : d) upper = upper && specialization_leq(pts[b], q);
      if (upper && !specialization_leq(pts[j], q)) rep.fail("p of the join is not the least upper bound");
    }
  }
  return rep;
}

// ------------------------------------------------------------------ Ω(Bᴬ)

BExpRelationSet bexp_relations(const Frame& a, const Frame& b) {
  return bexp_relations(WayBelowOracle::finite(a), b);
}

BExpRelationSet bexp_relations(const WayBelowOracle& wba, const Frame& b) {
  BExpRelationSet rel;
  const Frame& a = wba.frame();
  rel.base_a = a;
  rel.base_b = b;
  auto& out = rel.instances;
  const std::size_t na = a.size();
  const std::size_t nb = b.size();

  // 1: [a ≪ f*(b)] ⊢ [a' ≪ f*(b')] for a' <= a, b <= b'
  for (Elem x = 0; x < na; ++x)
    for (Elem x2 = 0; x2 < na; ++x2)
      for (Elem y = 0; y < nb; ++y)
        for (Elem y2 = 0; y2 < nb; ++y2)
          if (a.leq(x2, x) && b.leq(y, y2) && (x != x2 || y != y2))
            out.push_back({1, {{x, y}}, {{x2, y2}}, 0, {}});
  // 2: ⊢ [⊥ ≪ f*(b)]
  for (Elem y = 0; y < nb; ++y) out.push_back({2, {}, {{a.bottom(), y}}, 0, {}});
  // 3: [a ≪ f*(b)], [a' ≪ f*(b)] ⊢ [a ∨ a' ≪ f*(b)]
  for (Elem x = 0; x < na; ++x)
    for (Elem x2 = x + 1; x2 < na; ++x2)
      for (Elem y = 0; y < nb; ++y) out.push_back({3, {{x, y}, {x2, y}}, {{a.join(x, x2), y}}, 0, {}});
  // 4: ⊢ [a ≪ f*(⊤)] for a ≪ ⊤
  for (Elem x = 0; x < na; ++x)
    if (wba(x, a.top())) out.push_back({4, {}, {{x, b.top()}}, 0, {}});
  // 5: [a ≪ f*(b)], [a ≪ f*(b')] ⊢ [a' ≪ f*(b ∧ b')] for a' ≪ a
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      for (Elem y2 = y; y2 < nb; ++y2)
        for (Elem x2 = 0; x2 < na; ++x2)
          if (wba(x2, x)) out.push_back({5, {{x, y}, {x, y2}}, {{x2, b.meet(y, y2)}}, 0, {}});
  // 6: [a ≪ f*(b)] ⊢ ⋁_{a ≪ a'} [a' ≪ f*(b)]
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      BExpInstance inst{6, {{x, y}}, {}, 0, {}};
      for (Elem x2 = 0; x2 < na; ++x2)
        if (wba(x, x2)) inst.rhs.emplace_back(x2, y);
      out.push_back(std::move(inst));
    }
  // 7: [a ≪ f*(b)] ⊢ ⋁_α [a ≪ f*(b_α)] for directed covers {b_α} of b
  for (Elem y = 0; y < nb; ++y) {
    std::set<ElemSet> families;
    for (const auto& c : covers_of(b, y)) families.insert(directify(b, c));
    for (const auto& fam : families)
      for (Elem x = 0; x < na; ++x) {
        BExpInstance inst{7, {{x, y}}, {}, 0, {}};
        for (Elem y2 : fam) inst.rhs.emplace_back(x, y2);
        out.push_back(std::move(inst));
      }
  }
  // 8: [a ≪ f*(b)] ⊢ ⋁_{a_α} ⋀_α [a_α ≪ f*(b_α)] for finite covers {b_α} of b
  for (Elem y = 0; y < nb; ++y)
    for (const auto& c : covers_of(b, y))
      for (Elem x = 0; x < na; ++x) out.push_back({8, {{x, y}}, {}, x, c});
  return rel;
}

std::pair<Elem, Elem> bexp_sides(const BExpRelationSet& rel, const BExpInstance& inst, const Frame& z,
                                 std::span<const Elem> g) {
  auto val = [&](std::pair<Elem, Elem> p) { return g[rel.generator(p.first, p.second)]; };
  Elem lhs = z.top();
  for (auto p : inst.lhs) lhs = z.meet(lhs, val(p));
  Elem rhs = z.bottom();
  if (inst.schema != 8) {
    for (auto p : inst.rhs) rhs = z.join(rhs, val(p));
    return {lhs, rhs};
  }
  // reach[j]: join over partial families (a_α) with ⋁ a_α = j of ⋀ g(a_α, b_α)
  const Frame& a = rel.base_a;
  std::vector<Elem> reach(a.size(), z.bottom());
  reach[a.bottom()] = z.top();
  for (Elem y : inst.family) {
    std::vector<Elem> next(a.size(), z.bottom());
    for (Elem j = 0; j < a.size(); ++j) {
      if (reach[j] == z.bottom()) continue;
      for (Elem x = 0; x < a.size(); ++x) {
        Elem k = a.join(j, x);
        next[k] = z.join(next[k], z.meet(reach[j], g[rel.generator(x, y)]));
      }
    }
    reach = std::move(next);
  }
  for (Elem j = 0; j < a.size(); ++j)
    if (a.leq(inst.a, j)) rhs = z.join(rhs, reach[j]);
  return {lhs, rhs};
}

std::optional<std::size_t> check_bexp_assignment(const BExpRelationSet& rel, const Frame& z,
                                                 std::span<const Elem> g) {
  for (std::size_t i = 0; i < rel.instances.size(); ++i) {
    auto [lhs, rhs] = bexp_sides(rel, rel.instances[i], z, g);
    if (!z.leq(lhs, rhs)) return i;
  }
  return std::nullopt;
}

namespace {

// Backtracking over the generators in (b, a) order; each instance is checked
// as soon as its last variable is assigned.
class BExpSearch {
 public:
  BExpSearch(const BExpRelationSet& rel, const Frame& z, std::size_t cap) : rel_(rel), z_(z), cap_(cap) {
    const Frame& a = rel.base_a;
    const Frame& b = rel.base_b;
    const std::size_t n = rel.generator_count();
    std::vector<std::size_t> pos(n);
    for (Elem y = 0; y < b.size(); ++y)
      for (Elem x = 0; x < a.size(); ++x) {
        pos[rel.generator(x, y)] = order_.size();
        order_.push_back(rel.generator(x, y));
      }
    due_.resize(n);
    for (std::size_t i = 0; i < rel.instances.size(); ++i) {
      const auto& inst = rel.instances[i];
      std::size_t last = 0;
      for (auto p : inst.lhs) last = std::max(last, pos[rel.generator(p.first, p.second)]);
      for (auto p : inst.rhs) last = std::max(last, pos[rel.generator(p.first, p.second)]);
      for (Elem y : inst.family)
        for (Elem x = 0; x < a.size(); ++x) last = std::max(last, pos[rel.generator(x, y)]);
      due_[last].push_back(i);
    }
  }

  std::size_t variables() const { return order_.size(); }

  // Consistent assignments of the first `depth` variables in search order.
  std::vector<std::vector<Elem>> prefixes(std::size_t depth) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> g(rel_.generator_count(), z_.bottom());
    collect(0, depth, g, out);
    return out;
  }

  void complete(std::vector<Elem> g, std::size_t from, std::vector<std::vector<Elem>>& out) {
    collect(from, order_.size(), g, out);
  }

 private:
  void collect(std::size_t i, std::size_t depth, std::vector<Elem>& g, std::vector<std::vector<Elem>>& out) {
    if (i == depth) {
      out.push_back(g);
      if (out.size() > cap_) throw ResourceError("too many assignments", out.size());
      return;
    }
    for (Elem v = 0; v < z_.size(); ++v) {
      g[order_[i]] = v;
      bool ok = true;
      for (std::size_t k : due_[i]) {
        auto [lhs, rhs] = bexp_sides(rel_, rel_.instances[k], z_, g);
        if (!z_.leq(lhs, rhs)) {
          ok = false;
          break;
        }
      }
      if (ok) collect(i + 1, depth, g, out);
    }
    g[order_[i]] = z_.bottom();
  }

  const BExpRelationSet& rel_;
  const Frame& z_;
  std::size_t cap_;
  std::vector<Elem> order_;
  std::vector<std::vector<std::size_t>> due_;
};

}  // namespace

std::vector<std::vector<Elem>> bexp_assignments(const BExpRelationSet& rel, const Frame& z, unsigned threads,
                                                std::size_t cap) {
  BExpSearch search(rel, z, cap);
  std::vector<std::vector<Elem>> out;
  if (threads <= 1 || search.variables() < 2) {
    search.complete(std::vector<Elem>(rel.generator_count(), z.bottom()), 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::size_t depth = 1;
  auto pre = search.prefixes(depth);
  while (pre.size() < 4 * threads && depth < search.variables()) pre = search.prefixes(++depth);
  std::vector<std::future<std::vector<std::vector<Elem>>>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      std::vector<std::vector<Elem>> part;
      for (std::size_t i = t; i < pre.size(); i += threads) search.complete(pre[i], depth, part);
      return part;
    }));
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (out.size() > cap) throw ResourceError("too many assignments", out.size());
  std::sort(out.begin(), out.end());
  return out;
}

BExpReport verify_bexp_universal(const Frame& a, const Frame& b, const std::vector<Frame>& zs,
                                 unsigned threads) {
  BExpReport rep;
  WayBelowOracle wba = WayBelowOracle::finite(a);
  BExpRelationSet rel = bexp_relations(wba, b);
  for (const Frame& z : zs) {
    TensorFrame za = TensorFrame::make(z, a);
    auto sols = bexp_assignments(rel, z, threads);
    std::vector<std::vector<Elem>> hs;
    for (const auto& h : homs(b, za.frame())) hs.push_back(h.image());
    BExpCase c{z.name(), sols.size(), hs.size(), false};
    bool good = sols.size() == hs.size();
    const std::string where = "A=" + a.name() + " B=" + b.name() + " Z=" + z.name() + ": ";
    if (!good)
      rep.fail(where + std::to_string(sols.size()) + " assignments but " + std::to_string(hs.size()) +
               " homomorphisms");
    auto to_assignment = [&](const std::vector<Elem>& k) {
      std::vector<Elem> g(rel.generator_count());
      for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < b.size(); ++y) g[rel.generator(x, y)] = big_f(za, wba, x, k[y]);
      return g;
    };
    for (const auto& g : sols) {
      std::vector<Elem> k(b.size());
      for (Elem y = 0; y < b.size(); ++y) {
        std::vector<std::pair<Elem, Elem>> rects;
        for (Elem x = 0; x < a.size(); ++x) rects.emplace_back(g[rel.generator(x, y)], x);
        k[y] = join_of_rects(za, rects);
      }
      auto hr = check_hom(b, za.frame(), k);
      if (!hr.ok()) {
        good = false;
        rep.fail(where + "an assignment induces a non-homomorphism: " + hr.message);
        continue;
      }
      if (!std::binary_search(hs.begin(), hs.end(), k)) {
        good = false;
        rep.fail(where + "an assignment has no partner homomorphism");
      }
      if (to_assignment(k) != g) {
        good = false;
        rep.fail(where + "assignment does not round-trip");
      }
    }
    for (const auto& k : hs) {
      auto g = to_assignment(k);
      if (auto bad = check_bexp_assignment(rel, z, g)) {
        good = false;
        rep.fail(where + "a homomorphism has no partner assignment (schema " +
                 std::to_string(rel.instances[*bad].schema) + " fails)");
      } else if (!std::binary_search(sols.begin(), sols.end(), g)) {
        good = false;
        rep.fail(where + "a homomorphism's assignment was not enumerated");
      }
    }
    c.bijection = good;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

PresentedFrame materialize_bexp(const Frame& a, const Frame& b, std::size_t cap, std::size_t max_pairs) {
  const std::size_t n = a.size() * b.size();
  if (n > max_pairs)
    throw ResourceError("materialized exponential is capped at " + std::to_string(max_pairs) + " generator pairs",
                        n);
  BExpRelationSet rel = bexp_relations(a, b);
  std::vector<std::string> symbols(n);
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) symbols[rel.generator(x, y)] = a.label(x) + "/" + b.label(y);
  GenSemilattice gens = GenSemilattice::free_on(symbols);
  auto bit = [&](std::pair<Elem, Elem> p) { return Elem{1} << rel.generator(p.first, p.second); };
  std::vector<CoverageInstance> instances;
  for (const auto& inst : rel.instances) {
    CoverageInstance ci;
    for (auto p : inst.lhs) ci.target |= bit(p);
    if (inst.schema != 8) {
      for (auto p : inst.rhs) ci.cover.push_back(bit(p));
    } else {
      // every family (a_α) indexed by the b_α whose join covers a
      std::set<Elem> terms;
      std::vector<Elem> pick(inst.family.size(), 0);
      while (true) {
        Elem j = a.bottom();
        Elem term = 0;
        for (std::size_t k = 0; k < pick.size(); ++k) {
          j = a.join(j, pick[k]);
          term |= bit({pick[k], inst.family[k]});
        }
        if (a.leq(inst.a, j)) terms.insert(term);
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == a.size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
      ci.cover.assign(terms.begin(), terms.end());
    }
    instances.push_back(std::move(ci));
  }
  Presentation p(std::move(gens), std::move(instances));
  return PresentedFrame::build(std::move(p), cap, b.name() + "^" + a.name());
}

}  // namespace pointless
