#include <doctest.h>

#include "oracles.hpp"
#include "pointless/tensor.hpp"

using namespace pointless;

namespace {

std::vector<std::pair<Frame, Frame>> small_pairs(std::size_t max_size) {
  std::vector<std::pair<Frame, Frame>> out;
  auto fs = frames_up_to(max_size);
  for (const Frame& l : fs)
    for (const Frame& r : fs) out.emplace_back(l, r);
  return out;
}

}  // namespace

TEST_CASE("Sierpinski squared") {
  auto t = TensorFrame::make(sierpinski(), sierpinski());
  CHECK(t.size() == 6);
  CHECK(oracle::tensor_size(sierpinski(), sierpinski()) == 6);
  CHECK(check_frame(t.frame().poset()).valid());
}

TEST_CASE("element counts match the join-irreducible oracle") {
  for (const auto& [l, r] : small_pairs(5)) {
    auto t = TensorFrame::make(l, r);
    CHECK(t.size() == oracle::tensor_size(l, r));
    CHECK(points(t.frame()).size() == points(l).size() * points(r).size());
  }
}

TEST_CASE("the two-element frame is a unit") {
  for (const Frame& f : frames_up_to(6)) {
    CHECK(find_isomorphism(TensorFrame::make(terminal(), f).frame(), f).has_value());
    CHECK(find_isomorphism(TensorFrame::make(f, terminal()).frame(), f).has_value());
  }
}

TEST_CASE("rectangles") {
  for (const auto& [l, r] : small_pairs(4)) {
    auto t = TensorFrame::make(l, r);
    const Frame& f = t.frame();
    CHECK(t.rect(l.top(), r.top()) == f.top());
    for (Elem x = 0; x < l.size(); ++x) CHECK(t.rect(x, r.bottom()) == f.bottom());
    for (Elem y = 0; y < r.size(); ++y) CHECK(t.rect(l.bottom(), y) == f.bottom());
    for (Elem x = 0; x < l.size(); ++x)
      for (Elem y = 0; y < r.size(); ++y)
        for (Elem x2 = 0; x2 < l.size(); ++x2)
          for (Elem y2 = 0; y2 < r.size(); ++y2)
            CHECK(t.rect(l.meet(x, x2), r.meet(y, y2)) == f.meet(t.rect(x, y), t.rect(x2, y2)));
    CHECK(check_hom(l, f, t.left_injection().image()).ok());
    CHECK(check_hom(r, f, t.right_injection().image()).ok());
  }
  auto t = TensorFrame::make(sierpinski(), terminal());
  CHECK_THROWS_AS(t.rect(5, 0), DomainError);
}

TEST_CASE("product maps") {
  Frame s = sierpinski();
  const Elem w = sierpinski_generic_open();
  auto id = product_map(FrameHom::identity(s), s);
  for (Elem u = 0; u < id.source.size(); ++u) CHECK(id.map(u) == u);

  Frame two = terminal();
  FrameHom f = FrameHom::make(s, two, {0, 1, 1});
  auto pm = product_map(f, s);
  CHECK(pm.map(pm.source.rect(w, w)) == pm.target.rect(two.top(), w));
  CHECK(check_hom(pm.source.frame(), pm.target.frame(), pm.map.image()).ok());
  // every value against the rectangle decomposition of the source element
  for (Elem u = 0; u < pm.source.size(); ++u) {
    std::vector<std::pair<Elem, Elem>> rects;
    for (auto [y, x] : decompose(pm.source, u)) rects.emplace_back(f(y), x);
    CHECK(pm.map(u) == join_of_rects(pm.target, rects));
  }
}

TEST_CASE("coeff examples") {
  Frame s = sierpinski();
  const Elem w = sierpinski_generic_open();
  auto t = TensorFrame::make(s, s);
  for (Elem u = 0; u < t.size(); ++u) CHECK(coeff(t, s.bottom(), u) == s.top());
  CHECK(coeff(t, s.top(), t.frame().bottom()) == s.bottom());
  for (const auto& [l, r] : small_pairs(4)) {
    auto tt = TensorFrame::make(l, r);
    for (Elem y = 0; y < l.size(); ++y)
      for (Elem s1 = 0; s1 < r.size(); ++s1)
        for (Elem s2 = 0; s2 < r.size(); ++s2)
          if (s1 != r.bottom() && r.leq(s1, s2) && y != l.top())
            CHECK(coeff(tt, s1, tt.rect(y, s2)) == y);
  }
  CHECK(coeff(t, w, t.rect(w, s.top())) == w);
}

TEST_CASE("coeff laws on small tensors") {
  for (const auto& [l, r] : small_pairs(5)) {
    if (l.size() * r.size() > 36) continue;
    auto t = TensorFrame::make(l, r);
    const Frame& f = t.frame();
    auto wb = WayBelowOracle::finite(r);
    for (Elem u = 0; u < t.size(); ++u) {
      for (Elem s = 0; s < r.size(); ++s) {
        const Elem c = coeff(t, s, u);
        for (Elem y = 0; y < l.size(); ++y) CHECK(f.leq(t.rect(y, s), u) == l.leq(y, c));
        for (Elem s2 = 0; s2 < r.size(); ++s2)
          if (r.leq(s, s2)) CHECK(l.leq(coeff(t, s2, u), c));
        for (Elem v = 0; v < t.size(); ++v)
          if (f.leq(u, v)) CHECK(l.leq(c, coeff(t, s, v)));
        CHECK(big_f(t, wb, s, u) == c);
      }
      Elem rebuilt = f.bottom();
      for (auto [y, s] : decompose(t, u)) rebuilt = f.join(rebuilt, t.rect(y, s));
      CHECK(rebuilt == u);
    }
  }
}

TEST_CASE("rectangle of meets and joins lies below the join of rectangles") {
  for (const auto& [l, r] : small_pairs(4)) {
    auto t = TensorFrame::make(l, r);
    const Frame& f = t.frame();
    for (Elem y1 = 0; y1 < l.size(); ++y1)
      for (Elem y2 = 0; y2 < l.size(); ++y2)
        for (Elem s1 = 0; s1 < r.size(); ++s1)
          for (Elem s2 = 0; s2 < r.size(); ++s2) {
            Elem lhs = t.rect(l.meet(y1, y2), r.join(s1, s2));
            CHECK(f.leq(lhs, f.join(t.rect(y1, s1), t.rect(y2, s2))));
            for (Elem y3 = 0; y3 < l.size(); ++y3) {
              Elem s3 = r.meet(s1, s2);
              Elem lhs3 = t.rect(l.meet(l.meet(y1, y2), y3), r.join(r.join(s1, s2), s3));
              Elem rhs3 = f.join(f.join(t.rect(y1, s1), t.rect(y2, s2)), t.rect(y3, s3));
              CHECK(f.leq(lhs3, rhs3));
            }
          }
  }
}

TEST_CASE("coeff is natural for homomorphisms between finite frames") {
  auto fs = frames_up_to(4);
  for (const Frame& y : fs)
    for (const Frame& z : fs)
      for (const FrameHom& f : homs(y, z))
        for (const Frame& x : fs) {
          auto src = TensorFrame::make(y, x);
          auto dst = TensorFrame::make(z, x);
          FrameHom pm = product_map(f, src, dst);
          for (Elem u = 0; u < src.size(); ++u)
            for (Elem s = 0; s < x.size(); ++s) CHECK(f(coeff(src, s, u)) == coeff(dst, s, pm(u)));
        }
}

TEST_CASE("product maps reject mismatched factors") {
  auto a = TensorFrame::make(sierpinski(), terminal());
  auto b = TensorFrame::make(terminal(), terminal());
  FrameHom f = FrameHom::identity(sierpinski());
  CHECK_THROWS_AS(product_map(f, a, b), DomainError);
}
