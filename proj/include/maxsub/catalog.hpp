#pragma once

#include <memory>
#include <string>

#include "maxsub/graph.hpp"
#include "maxsub/set_system.hpp"

namespace maxsub {

inline SetSystem clique_system(std::shared_ptr<const Graph> g) {
  const std::size_t n = g->size();
  auto oracle = [g](const ElementSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (!g->adjacent(x[i], x[j])) return false;
    return true;
  };
  auto extends = [g](const ElementSet& x, Element y) {
    for (Element v : x)
      if (!g->adjacent(v, y)) return false;
    return true;
  };
  return SetSystem("clique", n, oracle, {true, true, true, true}, extends);
}

inline SetSystem clique_system(const Graph& g) { return clique_system(std::make_shared<const Graph>(g)); }

inline SetSystem independent_set_system(std::shared_ptr<const Graph> g) {
  const std::size_t n = g->size();
  auto oracle = [g](const ElementSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (g->adjacent(x[i], x[j])) return false;
    return true;
  };
  auto extends = [g](const ElementSet& x, Element y) {
    for (Element v : x)
      if (g->adjacent(v, y)) return false;
    return true;
  };
  return SetSystem("independent-set", n, oracle, {true, true, true, true}, extends);
}

inline SetSystem independent_set_system(const Graph& g) {
  return independent_set_system(std::make_shared<const Graph>(g));
}

/// X is a clique under black u white edges and connected by black edges.
/// Connected hereditary, hence commutable; not hereditary in general.
inline SetSystem bcclique_system(std::shared_ptr<const BiColoredGraph> g) {
  const std::size_t n = g->size();
  auto oracle = [g](const ElementSet& x) { return g->is_bcclique(x); };
  auto extends = [g](const ElementSet& x, Element y) {
    bool linked = x.empty();
    for (Element v : x) {
      const EdgeColor c = g->color(v, y);
      if (c == EdgeColor::None) return false;
      linked = linked || c == EdgeColor::Black;
    }
    return linked;
  };
  return SetSystem("bcclique", n, oracle, {true, false, true, true}, extends);
}

inline SetSystem bcclique_system(const BiColoredGraph& g) {
  return bcclique_system(std::make_shared<const BiColoredGraph>(g));
}

/// Members of `base` that meet `required` (plus the empty set). Stays
/// strongly accessible and commutable when the base is, but loses
/// (connected) heredity.
inline SetSystem required_variant(const SetSystem& base, const ElementSet& required) {
  base.check_range(required);
  auto req = std::make_shared<const ElementSet>(required);
  auto oracle = [base, req](const ElementSet& x) {
    return base.oracle()(x) && (x.empty() || x.intersects(*req));
  };
  SetSystem::ExtendsFn extends;
  if (base.extends_fn()) {
    extends = [fast = base.extends_fn(), req](const ElementSet& x, Element y) {
      return fast(x, y) && (req->contains(y) || x.intersects(*req));
    };
  }
  SystemClass cls = base.declared_class();
  cls.hereditary = false;
  cls.connected_hereditary = false;
  return SetSystem("required-" + base.name(), base.ground_size(), oracle, cls, extends, base.q_bound());
}

}  // namespace maxsub
