#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxsub/element_set.hpp"

namespace maxsub {

/// Undirected simple graph on nodes 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Returns false if the edge was already present.
  bool add_edge(Element u, Element v) {
    check(u, v);
    if (adj_[idx(u, v)]) return false;
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    return true;
  }

  bool adjacent(Element u, Element v) const {
    return u != v && u >= 1 && v >= 1 && u <= n_ && v <= n_ && adj_[idx(u, v)] != 0;
  }

  /// Edges as (min, max) pairs, sorted.
  std::vector<std::pair<Element, Element>> edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph complement() const {
    Graph g(n_);
    for (Element u = 1; u <= n_; ++u)
      for (Element v = u + 1; v <= n_; ++v)
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  static Graph complete(std::size_t n) { return Graph(n).complement(); }

  static Graph path(std::size_t n) {
    Graph g(n);
    for (Element u = 1; u < n; ++u) g.add_edge(u, u + 1);
    return g;
  }

 private:
  std::size_t idx(Element u, Element v) const { return (u - 1) * n_ + (v - 1); }
  void check(Element u, Element v) const {
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (u < 1 || v < 1 || u > n_ || v > n_)
      throw std::domain_error("edge endpoint outside 1.." + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::pair<Element, Element>> edges_;
};

enum class EdgeColor : std::uint8_t { None = 0, Black = 1, White = 2 };

/// Graph whose edges are black or white (never both).
class BiColoredGraph {
 public:
  struct Edge {
    Element u;
    Element v;
    EdgeColor color;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  BiColoredGraph() = default;
  explicit BiColoredGraph(std::size_t n) : n_(n), color_(n * n, EdgeColor::None) {}

  std::size_t size() const noexcept { return n_; }

  /// Throws std::invalid_argument on a self-loop or if the pair already has an edge.
  void add_edge(Element u, Element v, EdgeColor c) {
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (u < 1 || v < 1 || u > n_ || v > n_)
      throw std::domain_error("edge endpoint outside 1.." + std::to_string(n_));
    if (c == EdgeColor::None) throw std::invalid_argument("edge without a color");
    if (color_[idx(u, v)] != EdgeColor::None)
      throw std::invalid_argument("pair " + std::to_string(u) + "-" + std::to_string(v) +
                                  " already has an edge");
    color_[idx(u, v)] = color_[idx(v, u)] = c;
  }

  EdgeColor color(Element u, Element v) const {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_) return EdgeColor::None;
    return color_[idx(u, v)];
  }
  bool adjacent(Element u, Element v) const { return color(u, v) != EdgeColor::None; }
  bool black(Element u, Element v) const { return color(u, v) == EdgeColor::Black; }
  bool white(Element u, Element v) const { return color(u, v) == EdgeColor::White; }

  /// All edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Element u = 1; u <= n_; ++u)
      for (Element v = u + 1; v <= n_; ++v)
        if (auto c = color(u, v); c != EdgeColor::None) out.push_back({u, v, c});
    return out;
  }

  std::size_t count(EdgeColor c) const {
    std::size_t k = 0;
    for (Element u = 1; u <= n_; ++u)
      for (Element v = u + 1; v <= n_; ++v) k += color(u, v) == c;
    return k;
  }

  /// Clique under black u white edges, connected through black edges.
  bool is_bcclique(const ElementSet& x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (!adjacent(x[i], x[j])) return false;
    return black_connected(x);
  }

  bool black_connected(const ElementSet& x) const {
    if (x.size() <= 1) return true;
    std::vector<char> seen(x.size(), 0);
    std::vector<std::size_t> todo{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const std::size_t i = todo.back();
      todo.pop_back();
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (!seen[j] && black(x[i], x[j])) {
          seen[j] = 1;
          ++reached;
          todo.push_back(j);
        }
      }
    }
    return reached == x.size();
  }

 private:
  std::size_t idx(Element u, Element v) const { return (u - 1) * n_ + (v - 1); }

  std::size_t n_ = 0;
  std::vector<EdgeColor> color_;
};

/// Partial injective map from nodes of A to nodes of B, kept sorted by the A side.
struct VertexPairMap {
  std::vector<std::pair<Element, Element>> pairs;

  void normalize() { std::sort(pairs.begin(), pairs.end()); }

  bool injective() const {
    std::vector<Element> a, b;
    for (auto [u, x] : pairs) {
      a.push_back(u);
      b.push_back(x);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end() &&
           std::adjacent_find(b.begin(), b.end()) == b.end();
  }

  /// "u:x u:x ..." in ascending order of u.
  std::string to_string() const {
    std::string s;
    for (auto [u, x] : pairs) {
      if (!s.empty()) s += ' ';
      s += std::to_string(u) + ':' + std::to_string(x);
    }
    return s;
  }

  friend auto operator<=>(const VertexPairMap&, const VertexPairMap&) = default;
};

}  // namespace maxsub
