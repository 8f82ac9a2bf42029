#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "maxsub/maxsub.hpp"

namespace testing_support {

using maxsub::BiColoredGraph;
using maxsub::EdgeColor;
using maxsub::Element;
using maxsub::ElementSet;
using maxsub::Graph;

/// Reconstructed 8-node running example.
inline BiColoredGraph fig1() {
  BiColoredGraph g(8);
  const int black[][2] = {{1, 2}, {2, 5}, {2, 6}, {2, 8}, {3, 5}, {4, 5}, {5, 8}, {7, 8}};
  const int white[][2] = {{1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 6}, {5, 6}, {5, 7}};
  for (auto& e : black) g.add_edge(e[0], e[1], EdgeColor::Black);
  for (auto& e : white) g.add_edge(e[0], e[1], EdgeColor::White);
  return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Element u = 1; u <= n; ++u)
    for (Element v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Each pair independently: black with p_black, white with p_white, else none.
inline BiColoredGraph random_bicolored(std::size_t n, double p_black, double p_white, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  BiColoredGraph g(n);
  for (Element u = 1; u <= n; ++u)
    for (Element v = u + 1; v <= n; ++v) {
      const double r = u01(rng);
      if (r < p_black)
        g.add_edge(u, v, EdgeColor::Black);
      else if (r < p_black + p_white)
        g.add_edge(u, v, EdgeColor::White);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Independent bitmask oracles (bit i-1 stands for element i).

using Mask = std::uint32_t;
using MaskPredicate = std::function<bool(Mask)>;

inline std::vector<Mask> adjacency_masks(std::size_t n, const std::function<bool(Element, Element)>& adj) {
  std::vector<Mask> a(n, 0);
  for (Element u = 1; u <= n; ++u)
    for (Element v = 1; v <= n; ++v)
      if (u != v && adj(u, v)) a[u - 1] |= Mask{1} << (v - 1);
  return a;
}

inline bool mask_clique(Mask m, const std::vector<Mask>& adj) {
  for (Mask r = m; r; r &= r - 1) {
    const int i = std::countr_zero(r);
    if ((m & ~(Mask{1} << i) & ~adj[i]) != 0) return false;
  }
  return true;
}

inline bool mask_connected(Mask m, const std::vector<Mask>& adj) {
  if (m == 0) return true;
  Mask seen = m & (~m + 1);
  for (Mask frontier = seen; frontier;) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= m & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == m;
}

inline MaskPredicate clique_pred(const Graph& g) {
  auto adj = adjacency_masks(g.size(), [&](Element u, Element v) { return g.adjacent(u, v); });
  return [adj](Mask m) { return mask_clique(m, adj); };
}

inline MaskPredicate independent_pred(const Graph& g) {
  auto adj = adjacency_masks(g.size(), [&](Element u, Element v) { return g.adjacent(u, v); });
  return [adj](Mask m) {
    for (Mask r = m; r; r &= r - 1)
      if (adj[std::countr_zero(r)] & m) return false;
    return true;
  };
}

inline MaskPredicate bcclique_pred(const BiColoredGraph& g) {
  auto any = adjacency_masks(g.size(), [&](Element u, Element v) { return g.adjacent(u, v); });
  auto blk = adjacency_masks(g.size(), [&](Element u, Element v) { return g.black(u, v); });
  return [any, blk](Mask m) { return mask_clique(m, any) && mask_connected(m, blk); };
}

inline MaskPredicate required_pred(MaskPredicate base, Mask required) {
  return [base, required](Mask m) { return base(m) && (m == 0 || (m & required) != 0); };
}

inline Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  for (Element e : s) m |= Mask{1} << (e - 1);
  return m;
}

inline ElementSet from_mask(Mask m) {
  maxsub::ElementSeq out;
  for (Mask r = m; r; r &= r - 1) out.push_back(static_cast<Element>(std::countr_zero(r) + 1));
  return ElementSet::from_sorted(std::move(out));
}

/// Nonempty members with no proper superset among the members, sorted.
inline std::vector<ElementSet> maximal_sets(std::size_t n, const MaskPredicate& member) {
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<char> in(std::size_t{full} + 1);
  for (Mask m = 0;; ++m) {
    in[m] = member(m);
    if (m == full) break;
  }
  std::vector<ElementSet> out;
  for (Mask m = 1; m <= full && m != 0; ++m) {
    if (!in[m]) continue;
    bool maximal = true;
    // Every proper superset: iterate supersets of m via the complement.
    const Mask rest = full & ~m;
    for (Mask sub = rest; sub && maximal; sub = (sub - 1) & rest)
      if (in[m | sub]) maximal = false;
    if (maximal) out.push_back(from_mask(m));
    if (m == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Collects emitted solutions in order.
struct Collector {
  std::vector<ElementSet> sets;
  std::vector<std::size_t> depths;
  void operator()(const ElementSet& s, std::size_t depth) {
    sets.push_back(s);
    depths.push_back(depth);
  }
  std::vector<ElementSet> sorted() const {
    auto v = sets;
    std::sort(v.begin(), v.end());
    return v;
  }
  bool has_duplicates() const {
    auto v = sorted();
    return std::adjacent_find(v.begin(), v.end()) != v.end();
  }
};

inline ElementSet set(std::initializer_list<Element> xs) { return ElementSet(xs); }

}  // namespace testing_support
