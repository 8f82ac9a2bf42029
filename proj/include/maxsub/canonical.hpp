#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "maxsub/element_set.hpp"
#include "maxsub/set_system.hpp"

namespace maxsub {

/// How complete() picks the next element.
///  - MinElement: smallest label in X^+_A.
///  - LayeredMin: smallest <layer, label> pair, layers taken relative to X
///    from source(X). Needed by the restricted-problem engines.
enum class ChooseStrategy { MinElement, LayeredMin };

inline const char* to_string(ChooseStrategy s) {
  return s == ChooseStrategy::MinElement ? "min-element" : "layered-min";
}

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

using LayerSeq = std::vector<std::uint32_t, SlotAllocator<std::uint32_t>>;

/// Layers of every element of X u X^+ relative to X from a start element.
struct LayerAssignment {
  Element start = 0;
  ElementSet elements;
  LayerSeq layers;  // parallel to elements

  std::optional<std::uint32_t> layer(Element e) const {
    auto i = elements.index_of(e);
    if (i == elements.size()) return std::nullopt;
    return layers[i];
  }
};

namespace detail {

inline bool member_with(const SetSystem& sys, const ElementSet& base, bool base_in_f, Element y) {
  return base_in_f ? sys.extends(base, y) : sys.contains(base.with(y));
}

/// Layers of the members of X (parallel to X's sorted order) from t, via the
/// B_0 = {t}, B_i = B_{i-1} u (B_{i-1}^+ n X) recurrence.
struct Layering {
  LayerSeq layer;
  std::vector<bool, SlotAllocator<bool>> level_in_f;  // B_i in F, per level i
  std::uint32_t depth = 0;                            // largest finite layer

  void fill_level(const ElementSet& x, std::uint32_t level, ElementSet& out) const {
    out.clear();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (layer[i] <= level) out.append(x[i]);
  }
};

inline Layering layering(const SetSystem& sys, const ElementSet& x, Element t) {
  Layering L;
  const std::size_t ti = x.index_of(t);
  if (ti == x.size()) throw PreconditionError("layer start is not in X");
  L.layer.assign(x.size(), kUnreachable);
  L.layer[ti] = 0;
  ElementSet b;
  b.reserve(x.size());
  b.append(t);
  L.level_in_f.push_back(sys.in_z(t));
  for (std::uint32_t level = 1;; ++level) {
    bool grew = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (L.layer[i] == kUnreachable && member_with(sys, b, L.level_in_f.back(), x[i])) {
        L.layer[i] = level;
        grew = true;
      }
    }
    if (!grew) break;
    L.depth = level;
    L.fill_level(x, level, b);
    L.level_in_f.push_back(sys.contains(b));
  }
  return L;
}

inline std::optional<Element> choose_min(const SetSystem& sys, const ElementSet& x,
                                         const Scope& scope) {
  std::optional<Element> pick;
  scope.find_if([&](Element e) {
    if (x.contains(e) || !sys.extends(x, e)) return false;
    pick = e;
    return true;
  });
  return pick;
}

inline std::optional<Element> choose_layered(const SetSystem& sys, const ElementSet& x,
                                             const Scope& scope, Element start) {
  const Layering L = layering(sys, x, start);
  ElementSet b;
  b.reserve(x.size());
  std::optional<Element> pick;
  // Candidates are scanned level by level in label order, so the first hit
  // has the smallest <layer, label> pair.
  for (std::uint32_t level = 1; level <= L.depth + 1; ++level) {
    L.fill_level(x, level - 1, b);
    const bool b_in_f = L.level_in_f[level - 1];
    const bool found = scope.find_if([&](Element e) {
      if (x.contains(e) || !member_with(sys, b, b_in_f, e) || !sys.extends(x, e)) return false;
      pick = e;
      return true;
    });
    if (found) return pick;
  }
  return choose_min(sys, x, scope);
}

inline std::optional<Element> choose_next(const SetSystem& sys, const ElementSet& x,
                                          const Scope& scope, ChooseStrategy strat,
                                          std::optional<Element> start) {
  if (strat == ChooseStrategy::MinElement || x.empty()) return choose_min(sys, x, scope);
  return choose_layered(sys, x, scope, start ? *start : source(sys, x));
}

/// complete() loop, growing x in place. Returns true when it stopped because
/// choose returned `stop_at` (which is then not added).
inline bool grow(const SetSystem& sys, ElementSet& x, const Scope& scope, ChooseStrategy strat,
                 std::optional<Element> stop_at, ElementSeq* trace) {
  for (;;) {
    std::optional<Element> start;
    if (strat == ChooseStrategy::LayeredMin && !x.empty()) start = source(sys, x);
    const auto c = choose_next(sys, x, scope, strat, start);
    if (!c) return false;
    if (stop_at && *c == *stop_at) return true;
    x.insert(*c);
    if (trace) trace->push_back(*c);
  }
}

/// Canonical order plus the position of pi; core is the prefix before it.
struct Anchor {
  ElementSeq order;
  std::size_t pi_index = 0;
};

/// Canonical order of a maximal S and its pi position. Uses one replay: the
/// last prefix S[j] whose choose() over U leaves S marks the core.
inline Anchor anchor(const SetSystem& sys, const ElementSet& s, ChooseStrategy strat) {
  Anchor a;
  const Element src = source(sys, s);
  ElementSet x;
  x.reserve(s.size());
  x.append(src);
  a.order.reserve(s.size());
  a.order.push_back(src);
  grow(sys, x, Scope(s), strat, std::nullopt, &a.order);
  if (a.order.size() != s.size())
    throw PreconditionError("canonical order does not cover the solution; F is not strongly accessible");

  const Scope all = Scope::universe(sys.ground_size());
  x.clear();
  x.append(src);
  std::size_t last_deviation = 0;
  for (std::size_t j = 1; j < a.order.size(); ++j) {
    const auto c = choose_next(sys, x, all, strat, src);
    if (!c || *c != a.order[j]) last_deviation = j;
    x.insert(a.order[j]);
  }
  a.pi_index = last_deviation;
  return a;
}

inline ElementSet prefix_set(const ElementSeq& order, std::size_t len) {
  ElementSet out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.insert(order[i]);
  return out;
}

}  // namespace detail

/// Layers of X u X^+ relative to X from t.
inline LayerAssignment layer_of(const SetSystem& sys, const ElementSet& x, Element t) {
  if (!x.contains(t) || !sys.in_z(t)) throw PreconditionError("layer start must lie in X n Z");
  if (!sys.contains(x)) throw PreconditionError("layer_of: X is not in F");
  const detail::Layering L = detail::layering(sys, x, t);
  ElementSeq elems;
  LayerSeq layers;
  ElementSet b;
  b.reserve(x.size());
  for (Element y = 1; y <= sys.ground_size(); ++y) {
    if (const auto i = x.index_of(y); i < x.size()) {
      elems.push_back(y);
      layers.push_back(L.layer[i]);
      continue;
    }
    if (!sys.extends(x, y)) continue;
    std::uint32_t lay = kUnreachable;
    for (std::uint32_t level = 1; level <= L.depth + 1; ++level) {
      L.fill_level(x, level - 1, b);
      if (detail::member_with(sys, b, L.level_in_f[level - 1], y)) {
        lay = level;
        break;
      }
    }
    elems.push_back(y);
    layers.push_back(lay);
  }
  return {t, ElementSet::from_sorted(std::move(elems)), std::move(layers)};
}

/// Next element complete() would add to X within A. `start` is the layer
/// reference for LayeredMin and defaults to source(X).
inline Element choose(const SetSystem& sys, const ElementSet& x, const Scope& a,
                      ChooseStrategy strat, std::optional<Element> start = std::nullopt) {
  if (!sys.contains(x)) throw PreconditionError("choose: X is not in F");
  if (strat == ChooseStrategy::LayeredMin && start && (!x.contains(*start) || !sys.in_z(*start)))
    throw PreconditionError("choose: start must lie in X n Z");
  const auto c = detail::choose_next(sys, x, a, strat, start);
  if (!c) throw NoCandidateError("choose: X^+_A is empty");
  return *c;
}

inline ElementSet complete(const SetSystem& sys, ElementSet x, const Scope& a, ChooseStrategy strat) {
  if (!sys.contains(x)) throw PreconditionError("complete: X is not in F");
  detail::grow(sys, x, a, strat, std::nullopt, nullptr);
  return x;
}

inline ElementSet complete(const SetSystem& sys, ElementSet x, ChooseStrategy strat) {
  return complete(sys, std::move(x), Scope::universe(sys.ground_size()), strat);
}

struct CompletionTrace {
  ElementSet set;
  ElementSeq added;  // in the order complete() added them
};

inline CompletionTrace complete_trace(const SetSystem& sys, ElementSet x, const Scope& a,
                                      ChooseStrategy strat) {
  if (!sys.contains(x)) throw PreconditionError("complete: X is not in F");
  CompletionTrace out;
  detail::grow(sys, x, a, strat, std::nullopt, &out.added);
  out.set = std::move(x);
  return out;
}

struct TruncatedCompletion {
  ElementSet set;
  bool stopped = false;  // choose() returned w at some point
};

/// complete(X, A)|_w: runs complete but halts, without adding it, the first
/// time choose() returns w.
inline TruncatedCompletion complete_truncated(const SetSystem& sys, ElementSet x, const Scope& a,
                                              Element w, ChooseStrategy strat) {
  if (!sys.contains(x)) throw PreconditionError("complete: X is not in F");
  const bool stopped = detail::grow(sys, x, a, strat, w, nullptr);
  return {std::move(x), stopped};
}

/// A maximal solution with its canonical order and the reverse-search
/// attributes derived from it.
struct CanonicalSolution {
  ChooseStrategy strategy = ChooseStrategy::MinElement;
  ElementSet elements;
  ElementSeq order;
  LayerSeq layers;  // LayeredMin only: layer of order[j] relative to S from order[0]
  Element source = 0;
  Element pi = 0;
  std::size_t core_size = 0;
  bool is_root = true;

  ElementSet core() const { return detail::prefix_set(order, core_size); }
  ElementSet prefix(std::size_t len) const { return detail::prefix_set(order, len); }
};

inline CanonicalSolution canonical_order(const SetSystem& sys, const ElementSet& s,
                                         ChooseStrategy strat) {
  if (s.empty() || !is_maximal(sys, s))
    throw PreconditionError("canonical_order: set is not a nonempty maximal solution");
  detail::Anchor a = detail::anchor(sys, s, strat);
  CanonicalSolution out;
  out.strategy = strat;
  out.elements = s;
  out.source = a.order.front();
  out.pi = a.order[a.pi_index];
  out.core_size = a.pi_index;
  out.is_root = a.pi_index == 0;
  if (strat == ChooseStrategy::LayeredMin) {
    const detail::Layering L = detail::layering(sys, s, out.source);
    out.layers.reserve(s.size());
    for (Element e : a.order) out.layers.push_back(L.layer[s.index_of(e)]);
  }
  out.order = std::move(a.order);
  return out;
}

/// complete(core(S)), or nothing for a root.
inline std::optional<ElementSet> parent(const SetSystem& sys, const CanonicalSolution& s) {
  if (s.is_root) return std::nullopt;
  return complete(sys, s.core(), s.strategy);
}

/// r(S) = complete(core(S) u {pi(S)}, parent(S) u {pi(S)}) under LayeredMin.
inline ElementSet r_of(const SetSystem& sys, const CanonicalSolution& s) {
  if (s.is_root) throw PreconditionError("r_of: a root has no restricted solution");
  if (s.strategy != ChooseStrategy::LayeredMin)
    throw PreconditionError("r_of: requires the layered canonical order");
  const ElementSet p = complete(sys, s.core(), ChooseStrategy::LayeredMin);
  return complete(sys, s.core().with(s.pi), Scope(p, s.pi), ChooseStrategy::LayeredMin);
}

/// Total order on maximal solutions: lexicographic on canonical orders, on
/// <layer, label> pairs for LayeredMin.
inline std::strong_ordering compare(const CanonicalSolution& s, const CanonicalSolution& t) {
  if (s.strategy != t.strategy) throw PreconditionError("compare: mixed choose strategies");
  const bool layered = s.strategy == ChooseStrategy::LayeredMin;
  const std::size_t n = std::min(s.order.size(), t.order.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (layered && s.layers[j] != t.layers[j]) return s.layers[j] <=> t.layers[j];
    if (s.order[j] != t.order[j]) return s.order[j] <=> t.order[j];
  }
  return s.order.size() <=> t.order.size();
}

}  // namespace maxsub
