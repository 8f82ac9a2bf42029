#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "maxsub/errors.hpp"
#include "maxsub/graph.hpp"

namespace maxsub {

/// Node label of the pair (u, x) in the product of A and B.
inline Element pair_label(Element u, Element x, std::size_t nb) {
  return static_cast<Element>((u - 1) * nb + x);
}

/// Product graph: nodes are pairs (u, x), labelled row-major. (u,x)-(v,y) is
/// black if uv and xy are both edges, white if both are non-edges, and absent
/// otherwise, including whenever the pairs share a coordinate.
inline BiColoredGraph product_graph(const Graph& a, const Graph& b) {
  if (a.size() == 0 || b.size() == 0) throw PreconditionError("product_graph: empty input graph");
  const std::size_t na = a.size(), nb = b.size();
  BiColoredGraph g(na * nb);
  for (Element u = 1; u <= na; ++u)
    for (Element x = 1; x <= nb; ++x)
      for (Element v = u + 1; v <= na; ++v)
        for (Element y = 1; y <= nb; ++y) {
          if (x == y) continue;
          const bool ea = a.adjacent(u, v), eb = b.adjacent(x, y);
          if (ea == eb)
            g.add_edge(pair_label(u, x, nb), pair_label(v, y, nb), ea ? EdgeColor::Black : EdgeColor::White);
        }
  return g;
}

/// Decodes product-graph labels into vertex pairs.
inline VertexPairMap map_back(const ElementSet& solution, const Graph& a, const Graph& b) {
  const std::size_t nb = b.size();
  VertexPairMap m;
  for (Element label : solution) {
    if (label < 1 || label > a.size() * nb) throw std::logic_error("map_back: label outside the product");
    m.pairs.emplace_back(static_cast<Element>((label - 1) / nb + 1), static_cast<Element>((label - 1) % nb + 1));
  }
  m.normalize();
  if (!m.injective()) throw std::logic_error("map_back: decoded map is not injective");
  return m;
}

inline constexpr std::size_t kDefaultMccisGuard = 36;

/// All maximal common connected induced subgraph isomorphisms, by brute
/// force over injective partial maps. Validation only.
inline std::set<VertexPairMap> mccis_oracle(const Graph& a, const Graph& b,
                                            std::size_t guard = kDefaultMccisGuard) {
  const std::size_t na = a.size(), nb = b.size();
  if (na * nb > guard)
    throw SizeGuardError("mccis_oracle: |A|*|B| = " + std::to_string(na * nb) + " exceeds guard " +
                         std::to_string(guard));
  std::vector<Element> img(na + 1, 0);  // 0 = unmapped
  std::vector<char> used(nb + 1, 0);

  auto compatible = [&](Element u, Element x) {
    for (Element v = 1; v <= na; ++v)
      if (img[v] && a.adjacent(u, v) != b.adjacent(x, img[v])) return false;
    return true;
  };
  auto connected = [&] {
    std::vector<Element> dom;
    for (Element u = 1; u <= na; ++u)
      if (img[u]) dom.push_back(u);
    if (dom.empty()) return false;
    std::vector<char> seen(na + 1, 0);
    std::vector<Element> todo{dom.front()};
    seen[dom.front()] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const Element u = todo.back();
      todo.pop_back();
      for (Element v : dom)
        if (!seen[v] && a.adjacent(u, v)) {
          seen[v] = 1;
          ++reached;
          todo.push_back(v);
        }
    }
    return reached == dom.size();
  };
  // No single (u, x) addition keeps the map a connected induced isomorphism.
  auto maximal = [&] {
    for (Element u = 1; u <= na; ++u) {
      if (img[u]) continue;
      for (Element x = 1; x <= nb; ++x) {
        if (used[x] || !compatible(u, x)) continue;
        img[u] = x;
        const bool ok = connected();
        img[u] = 0;
        if (ok) return false;
      }
    }
    return true;
  };

  std::set<VertexPairMap> out;
  auto rec = [&](auto&& self, Element u) -> void {
    if (u > na) {
      if (connected() && maximal()) {
        VertexPairMap m;
        for (Element v = 1; v <= na; ++v)
          if (img[v]) m.pairs.emplace_back(v, img[v]);
        out.insert(std::move(m));
      }
      return;
    }
    self(self, u + 1);
    for (Element x = 1; x <= nb; ++x) {
      if (used[x] || !compatible(u, x)) continue;
      img[u] = x;
      used[x] = 1;
      self(self, u + 1);
      img[u] = 0;
      used[x] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace maxsub
