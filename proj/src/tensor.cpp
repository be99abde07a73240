#include "pointless/tensor.hpp"

#include <functional>

namespace pointless {

namespace {

// Nonempty antichains of f avoiding bottom.
std::vector<std::vector<Elem>> antichains(const Frame& f) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  std::function<void(Elem)> go = [&](Elem next) {
    if (!cur.empty()) out.push_back(cur);
    for (Elem e = next; e < f.size(); ++e) {
      if (e == f.bottom()) continue;
      bool comparable = false;
      for (Elem c : cur) comparable = comparable || f.leq(c, e) || f.leq(e, c);
      if (comparable) continue;
      cur.push_back(e);
      go(e + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

}  // namespace

std::vector<CoverageInstance> tensor_coverage(const Frame& left, const Frame& right) {
  const std::size_t nr = right.size();
  auto gen = [&](Elem x, Elem y) { return x * nr + y; };
  std::vector<CoverageInstance> out;
  for (Elem y = 0; y < nr; ++y) out.push_back({gen(left.bottom(), y), {}});
  for (Elem x = 0; x < left.size(); ++x)
    if (x != left.bottom()) out.push_back({gen(x, right.bottom()), {}});
  auto xs_all = antichains(left);
  auto ys_all = antichains(right);
  for (const auto& xs : xs_all)
    for (const auto& ys : ys_all) {
      if (xs.size() == 1 && ys.size() == 1) continue;
      CoverageInstance inst;
      inst.target = gen(left.join(xs), right.join(ys));
      for (Elem x : xs)
        for (Elem y : ys) inst.cover.push_back(gen(x, y));
      out.push_back(std::move(inst));
    }
  return out;
}

TensorFrame TensorFrame::make(const Frame& left, const Frame& right, std::size_t cap) {
  TensorFrame t;
  t.left_ = left;
  t.right_ = right;
  auto gens = GenSemilattice::product(GenSemilattice::of_frame(left), GenSemilattice::of_frame(right));
  Presentation p(std::move(gens), tensor_coverage(left, right), Presentation::Stability::already_stable);
  std::string name = (left.name().empty() ? "L" : left.name()) + "(x)" +
                     (right.name().empty() ? "R" : right.name());
  t.presented_ = PresentedFrame::build(std::move(p), cap, std::move(name));
  return t;
}

Elem TensorFrame::rect(Elem x, Elem y) const {
  left_.require(x);
  right_.require(y);
  return presented_.embed(generator(x, y));
}

FrameHom TensorFrame::left_injection() const {
  std::vector<Elem> img(left_.size());
  for (Elem x = 0; x < left_.size(); ++x) img[x] = rect(x, right_.top());
  return FrameHom::trusted(left_, frame(), std::move(img));
}

FrameHom TensorFrame::right_injection() const {
  std::vector<Elem> img(right_.size());
  for (Elem y = 0; y < right_.size(); ++y) img[y] = rect(left_.top(), y);
  return FrameHom::trusted(right_, frame(), std::move(img));
}

FrameHom product_map(const FrameHom& f, const TensorFrame& source, const TensorFrame& target) {
  if (!f.source().same_structure(source.left()) || !f.target().same_structure(target.left()) ||
      !source.right().same_structure(target.right()))
    throw DomainError("product_map: tensor factors do not match the homomorphism");
  const Frame& x = source.right();
  std::vector<Elem> assignment(source.left().size() * x.size());
  for (Elem y = 0; y < source.left().size(); ++y)
    for (Elem s = 0; s < x.size(); ++s) assignment[source.generator(y, s)] = target.rect(f(y), s);
  auto r = eval_assignment(source.presented(), target.frame(), assignment);
  if (!r.ok()) throw InternalError("product map assignment rejected: " + r.violation->message);
  return *r.hom;
}

ProductMap product_map(const FrameHom& f, const Frame& right) {
  ProductMap pm;
  pm.source = TensorFrame::make(f.source(), right);
  pm.target = TensorFrame::make(f.target(), right);
  pm.map = product_map(f, pm.source, pm.target);
  return pm;
}

Elem coeff(const TensorFrame& t, Elem s, Elem u) {
  t.right().require(s);
  t.frame().require(u);
  Elem r = t.left().bottom();
  for (Elem y = 0; y < t.left().size(); ++y)
    if (t.contains(u, y, s)) r = t.left().join(r, y);
  return r;
}

Elem big_f(const TensorFrame& t, const WayBelowOracle& wb, Elem s, Elem u) {
  t.right().require(s);
  t.frame().require(u);
  Elem r = t.left().bottom();
  for (Elem s2 = 0; s2 < t.right().size(); ++s2) {
    if (!wb(s, s2)) continue;
    for (Elem y = 0; y < t.left().size(); ++y)
      if (t.contains(u, y, s2)) r = t.left().join(r, y);
  }
  return r;
}

Elem join_of_rects(const TensorFrame& t, const std::vector<std::pair<Elem, Elem>>& rects) {
  Bits d(t.presented().presentation().size());
  for (auto [x, y] : rects) d.set(t.generator(x, y));
  return t.presented().generated_by(d);
}

std::vector<std::pair<Elem, Elem>> decompose(const TensorFrame& t, Elem u) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem s = 0; s < t.right().size(); ++s) out.emplace_back(coeff(t, s, u), s);
  if (join_of_rects(t, out) != u) throw InternalError("decomposition does not rebuild the element");
  return out;
}

}  // namespace pointless
