#include "pointless/chain.hpp"

#include <algorithm>
#include <sstream>

#include "pointless/errors.hpp"
#include "pointless/frame.hpp"
#include "pointless/waybelow.hpp"

namespace pointless::chains {

std::string AscElem::str() const { return is_limit() ? "inf" : "x" + std::to_string(n); }

std::string DescElem::str() const { return is_bottom() ? "bot" : "y" + std::to_string(k); }

bool asc_way_below(AscElem a, AscElem b) { return a <= b && !a.is_limit(); }

bool desc_way_below(DescElem a, DescElem b) { return a <= b; }

ChainCompactness asc_locally_compact() {
  // Fin(n) ≪ Fin(n) so Fin(n) is the join of what is way below it; ∞ is the
  // sup of the Fin(n), each way below ∞.
  for (std::uint64_t n = 0; n < 64; ++n)
    if (!asc_way_below(AscElem::fin(n), AscElem::fin(n)) ||
        !asc_way_below(AscElem::fin(n), AscElem::limit()))
      return {false, "Fin(" + std::to_string(n) + ") fails the analytic rule"};
  if (asc_way_below(AscElem::limit(), AscElem::limit()))
    return {false, "the limit is treated as compact"};
  return {true, "finite elements are compact; inf = sup of Fin(n), each way below inf"};
}

ChainCompactness desc_locally_compact() {
  for (std::uint64_t k = 0; k < 64; ++k)
    if (!desc_way_below(DescElem::y(k), DescElem::y(k)))
      return {false, "Y(" + std::to_string(k) + ") is not compact"};
  if (!desc_way_below(DescElem::bottom(), DescElem::bottom())) return {false, "bot is not compact"};
  return {true, "every nonempty subset attains its sup, so every element is compact"};
}

AscElem asc_interpolate(AscElem lower, AscElem upper) {
  if (!asc_way_below(lower, upper))
    throw DomainError("asc_interpolate needs " + lower.str() + " way below " + upper.str());
  std::vector<AscElem> candidates;
  for (std::uint64_t n = 0; n <= lower.n + 1; ++n) candidates.push_back(AscElem::fin(n));
  candidates.push_back(AscElem::limit());
  auto s = interpolate_over<AscElem>(
      candidates, AscElem::bottom(), lower, upper, asc_way_below,
      [](AscElem a, AscElem b) { return a <= b; }, [](AscElem a, AscElem b) { return std::max(a, b); });
  if (!s || !asc_way_below(lower, *s) || !asc_way_below(*s, upper))
    throw InternalError("interpolation failed between " + lower.str() + " and " + upper.str());
  return *s;
}

// ---------------------------------------------------------------- staircases

StaircaseIdeal StaircaseIdeal::bottom() { return StaircaseIdeal{}; }

StaircaseIdeal StaircaseIdeal::top() {
  StaircaseIdeal u;
  u.tail_.height = DescElem::top();
  return u;
}

StaircaseIdeal StaircaseIdeal::from_rectangles(const std::vector<std::pair<DescElem, AscElem>>& rects) {
  StaircaseIdeal u;
  std::uint64_t last = 0;
  for (auto [y, x] : rects) {
    if (x.is_limit()) {
      u.tail_.height = std::max(u.tail_.height, y);
    } else {
      last = std::max(last, x.n);
    }
  }
  u.heights_.assign(last, u.tail_.height);
  for (auto [y, x] : rects) {
    if (x.is_limit()) continue;
    for (std::uint64_t n = 1; n <= x.n; ++n) u.heights_[n - 1] = std::max(u.heights_[n - 1], y);
  }
  return u;
}

StaircaseIdeal StaircaseIdeal::diagonal(std::uint64_t offset) {
  StaircaseIdeal u;
  u.tail_.kind = Tail::Kind::diagonal;
  u.tail_.offset = offset;
  return u;
}

StaircaseIdeal StaircaseIdeal::truncated_diagonal(std::uint64_t last, std::uint64_t offset) {
  std::vector<std::pair<DescElem, AscElem>> rects;
  for (std::uint64_t n = 0; n <= last; ++n) rects.emplace_back(DescElem::y(n + offset), AscElem::fin(n));
  return from_rectangles(rects);
}

DescElem StaircaseIdeal::height(AscElem x) const {
  if (x.is_limit()) {
    // infimum of the finite heights, which is the eventual tail value
    return tail_.kind == Tail::Kind::diagonal ? DescElem::bottom() : tail_.height;
  }
  if (x.n == 0) return DescElem::top();
  if (x.n <= heights_.size()) return heights_[x.n - 1];
  if (tail_.kind == Tail::Kind::diagonal) return DescElem::y(x.n + tail_.offset);
  return tail_.height;
}

std::vector<StaircaseIdeal::Step> StaircaseIdeal::steps() const {
  std::vector<Step> out;
  for (std::uint64_t n = 1; n <= heights_.size(); ++n) {
    if (n < heights_.size() && heights_[n] == heights_[n - 1]) continue;
    out.push_back({AscElem::fin(n), heights_[n - 1]});
  }
  return out;
}

std::string StaircaseIdeal::validate() const {
  if (height(AscElem::fin(0)) != DescElem::top()) return "height at Fin(0) is not top";
  DescElem prev = DescElem::top();
  const std::uint64_t horizon = heights_.size() + 8;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    DescElem h = height(AscElem::fin(n));
    if (h > prev) return "height increases at Fin(" + std::to_string(n) + ")";
    prev = h;
  }
  if (tail_.kind == Tail::Kind::constant) {
    if (!heights_.empty() && tail_.height > heights_.back()) return "tail rises above the last step";
    if (height(AscElem::limit()) != tail_.height) return "limit row is not the infimum of the tail";
  } else {
    if (!heights_.empty() && DescElem::y(heights_.size() + 1 + tail_.offset) > heights_.back())
      return "diagonal tail rises above the last step";
    if (height(AscElem::limit()) != DescElem::bottom()) return "limit row of a diagonal tail is not bottom";
  }
  return {};
}

DescElem stair_coeff(const StaircaseIdeal& u, AscElem s) { return u.height(s); }

DescElem stair_big_f(const StaircaseIdeal& u, AscElem s) {
  // s ≪ s for finite s and h is antitone, so the best s' is s itself.
  return s.is_limit() ? DescElem::bottom() : u.height(s);
}

bool zero_point(DescElem y) { return !y.is_bottom(); }

std::string validate_zero_point(std::uint64_t depth) {
  // Check on the finite truncation bot < Y(k) < ... < Y(0) with frame-core.
  for (std::uint64_t k = 0; k <= depth; ++k) {
    Frame trunc = pointless::chain(static_cast<std::size_t>(k + 2));
    // element 0 is bottom, element i >= 1 is Y(k + 1 - i)
    auto elem = [&](Elem i) { return i == 0 ? DescElem::bottom() : DescElem::y(k + 1 - i); };
    static const Frame two = terminal();
    std::vector<Elem> img(trunc.size());
    for (Elem i = 0; i < trunc.size(); ++i) img[i] = zero_point(elem(i)) ? two.top() : two.bottom();
    auto r = check_hom(trunc, two, img);
    if (!r.ok()) return "truncation at depth " + std::to_string(k) + ": " + r.message;
  }
  return {};
}

AscElem point_pushforward(const StaircaseIdeal& u) {
  if (!u.height(AscElem::limit()).is_bottom()) return AscElem::limit();
  const auto& t = u.tail();
  if (t.kind == StaircaseIdeal::Tail::Kind::diagonal) return AscElem::limit();
  if (!t.height.is_bottom()) return AscElem::limit();
  // finitely many nonempty columns
  AscElem best = AscElem::bottom();
  for (std::uint64_t n = 1; n <= u.explicit_length(); ++n)
    if (!u.height(AscElem::fin(n)).is_bottom()) best = AscElem::fin(n);
  return best;
}

NaturalityReport naturality_at(const StaircaseIdeal& u, AscElem s) {
  NaturalityReport r;
  // f̂*(u) is the x-range [⊥, pushforward]; φ ⊗ s lies below it for φ = ⊤
  // exactly when s <= pushforward.
  r.coeff_after_pushforward = s <= point_pushforward(u);
  r.pushforward_of_coeff = zero_point(stair_coeff(u, s));
  return r;
}

NaturalityReport counterexample_report(const StaircaseIdeal& u) { return naturality_at(u, AscElem::limit()); }

NaturalityReport counterexample_report() { return counterexample_report(StaircaseIdeal::diagonal()); }

std::string sketch(const StaircaseIdeal& u, std::uint64_t columns, std::uint64_t rows) {
  std::ostringstream out;
  for (std::uint64_t k = 0; k < rows; ++k) {
    DescElem y = DescElem::y(k);
    out << (y.str() + "    ").substr(0, 4) << "|";
    for (std::uint64_t n = 1; n <= columns; ++n) out << (u.member(y, AscElem::fin(n)) ? "#" : ".");
    out << " ... " << (u.member(y, AscElem::limit()) ? "#" : ".") << "\n";
  }
  out << "    +" << std::string(columns, '-') << "     \n";
  out << "     x1.." << "x" << columns << "  inf\n";
  return out.str();
}

}  // namespace pointless::chains
