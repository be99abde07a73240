#pragma once

// Brute-force answer keys. Everything here works from the order relation
// alone and shares no code with the library's algorithms.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pointless/frame.hpp"

namespace oracle {

using pointless::Elem;
using pointless::Frame;
using pointless::Poset;

using Order = std::vector<std::vector<bool>>;

inline Order order_of(const Poset& p) {
  Order o(p.size(), std::vector<bool>(p.size()));
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b) o[a][b] = p.leq(a, b);
  return o;
}

// Least upper bound of a subset (mask) by scanning all elements.
inline std::optional<Elem> sup(const Order& o, std::uint64_t mask) {
  const std::size_t n = o.size();
  std::optional<Elem> best;
  for (Elem u = 0; u < n; ++u) {
    bool upper = true;
    for (Elem e = 0; e < n; ++e)
      if ((mask >> e & 1) && !o[e][u]) upper = false;
    if (!upper) continue;
    bool least = true;
    for (Elem v = 0; v < n; ++v) {
      bool upper_v = true;
      for (Elem e = 0; e < n; ++e)
        if ((mask >> e & 1) && !o[e][v]) upper_v = false;
      if (upper_v && !o[u][v]) least = false;
    }
    if (least) best = u;
  }
  return best;
}

inline std::optional<Elem> inf(const Order& o, std::uint64_t mask) {
  Order dual(o.size(), std::vector<bool>(o.size()));
  for (Elem a = 0; a < o.size(); ++a)
    for (Elem b = 0; b < o.size(); ++b) dual[a][b] = o[b][a];
  return sup(dual, mask);
}

inline std::uint64_t bit(Elem e) { return std::uint64_t{1} << e; }

// Frame distributivity a ∧ ⋁B = ⋁(a ∧ b) for every a and every subset B.
inline bool is_frame(const Order& o) {
  const std::size_t n = o.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (!sup(o, m) || !inf(o, m)) return false;
  for (Elem a = 0; a < n; ++a)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Elem lhs = *inf(o, bit(a) | bit(*sup(o, m)));
      std::uint64_t parts = 0;
      for (Elem b = 0; b < n; ++b)
        if (m >> b & 1) parts |= bit(*inf(o, bit(a) | bit(b)));
      if (lhs != *sup(o, parts)) return false;
    }
  return true;
}

// h preserves meets and joins of every subset, empty ones included.
inline bool preserves_all(const Frame& f, const Frame& g, const std::vector<Elem>& h) {
  Order of = order_of(f.poset());
  Order og = order_of(g.poset());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
    std::uint64_t img = 0;
    for (Elem e = 0; e < f.size(); ++e)
      if (m >> e & 1) img |= bit(h[e]);
    if (h[*sup(of, m)] != *sup(og, img)) return false;
    if (h[*inf(of, m)] != *inf(og, img)) return false;
  }
  return true;
}

// Number of maps f -> g preserving all meets and joins.
inline std::size_t count_homs(const Frame& f, const Frame& g) {
  std::size_t count = 0;
  std::vector<Elem> h(f.size(), 0);
  while (true) {
    if (preserves_all(f, g, h)) ++count;
    std::size_t k = 0;
    while (k < h.size() && ++h[k] == g.size()) h[k++] = 0;
    if (k == h.size()) break;
  }
  return count;
}

// Upper sets of a finite order, counted by subset scan.
inline std::size_t count_upsets(const Order& o) {
  const std::size_t n = o.size();
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool up = true;
    for (Elem a = 0; a < n && up; ++a)
      for (Elem b = 0; b < n && up; ++b)
        if ((m >> a & 1) && o[a][b] && !(m >> b & 1)) up = false;
    if (up) ++count;
  }
  return count;
}

// Join-irreducible elements (nonbottom, not the join of two strictly smaller).
inline std::vector<Elem> join_irreducibles(const Frame& f) {
  std::vector<Elem> out;
  for (Elem a = 0; a < f.size(); ++a) {
    if (a == f.bottom()) continue;
    bool irreducible = true;
    for (Elem b = 0; b < f.size(); ++b)
      for (Elem c = 0; c < f.size(); ++c)
        if (f.lt(b, a) && f.lt(c, a) && f.join(b, c) == a) irreducible = false;
    if (irreducible) out.push_back(a);
  }
  return out;
}

// A finite distributive lattice is the lattice of downsets of its
// join-irreducibles, so |F ⊗ G| is the number of downsets (equivalently
// upper sets of the dual) of J(F) × J(G).
inline std::size_t tensor_size(const Frame& f, const Frame& g) {
  auto jf = join_irreducibles(f);
  auto jg = join_irreducibles(g);
  const std::size_t n = jf.size() * jg.size();
  Order o(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      o[i][j] = f.leq(jf[i / jg.size()], jf[j / jg.size()]) && g.leq(jg[i % jg.size()], jg[j % jg.size()]);
  return count_upsets(o);
}

}  // namespace oracle
