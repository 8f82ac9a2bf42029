#pragma once

#include <cassert>
#include <functional>
#include <optional>
#include <utility>

#include "maxsub/canonical.hpp"
#include "maxsub/enum_refined.hpp"
#include "maxsub/report.hpp"
#include "maxsub/restricted.hpp"

namespace maxsub {

/// Resumption point of the stateless traversal: current node P, last child
/// S, current w and current restricted solution R.
struct TraversalState {
  ElementSet p;
  std::optional<ElementSet> s;
  std::optional<Element> w;
  std::optional<ElementSet> r;
};

/// next-node: successor of w in label order, or 1 when w is none.
inline std::optional<Element> next_node(std::size_t n, std::optional<Element> w) {
  const Element v = w ? *w + 1 : 1;
  if (v > n) return std::nullopt;
  return v;
}

/// Restarts the restricted stream for (P, w) and returns the solution after
/// `prev` (the first one when prev is none). P itself is skipped.
inline std::optional<ElementSet> next_r(const SetSystem& sys, const RestrictedSolver& solver,
                                        const ElementSet& p, Element w,
                                        const std::optional<ElementSet>& prev,
                                        RestrictedCounters* counters = nullptr) {
  std::optional<ElementSet> out;
  bool take = !prev;
  if (counters) ++counters->calls;
  solver.for_each(sys, p, w, [&](const ElementSet& r) {
    if (counters) ++counters->solutions;
    if (r == p) return true;
    if (take) {
      out = r;
      return false;
    }
    if (r == *prev) take = true;
    return true;
  });
  return out;
}

/// Next child D of P for (w, R) whose source exceeds source(prev).
inline std::optional<ElementSet> next_child(const SetSystem& sys, const ElementSet& p, Element w,
                                            const ElementSet& r, const std::optional<ElementSet>& prev) {
  const Element after = prev ? source(sys, *prev) : 0;
  for (Element s : r) {
    if (s <= after || s == w || !sys.in_z(s)) continue;
    if (auto d = detail::refined_candidate(sys, p, w, r, s)) return d;
  }
  return std::nullopt;
}

/// pi(X) = source(X) under the layered canonical order.
inline bool is_root(const SetSystem& sys, const ElementSet& x) {
  return detail::anchor(sys, x, ChooseStrategy::LayeredMin).pi_index == 0;
}

/// Observation points for tests; the traversal never reads them back.
struct StatelessHooks {
  /// (child, P, w, R) when a child is entered.
  std::function<void(const ElementSet&, const ElementSet&, Element, const ElementSet&)> on_descend;
  /// (child, parent(child), pi(child), r(child)) recomputed when leaving a child.
  std::function<void(const ElementSet&, const ElementSet&, Element, const ElementSet&)> on_backtrack;
};

namespace detail {

/// Moves the state to the next child of st.p, or returns false when the
/// children of st.p are exhausted.
inline bool advance(const SetSystem& sys, const RestrictedSolver& solver, TraversalState& st,
                    RestrictedCounters& counters, std::optional<ElementSet>& child) {
  const std::size_t n = sys.ground_size();
  if (!st.w) {
    st.w = next_node(n, std::nullopt);
    st.r.reset();
    st.s.reset();
  }
  while (st.w) {
    if (!st.p.contains(*st.w)) {
      if (!st.r) st.r = next_r(sys, solver, st.p, *st.w, std::nullopt, &counters);
      while (st.r) {
        child = next_child(sys, st.p, *st.w, *st.r, st.s);
        if (child) return true;
        st.r = next_r(sys, solver, st.p, *st.w, st.r, &counters);
        st.s.reset();
      }
    }
    st.w = next_node(n, st.w);
    st.r.reset();
    st.s.reset();
  }
  return false;
}

}  // namespace detail

/// Stateless engine: depth-first traversal of the reverse-search forest without a
/// stack. Descending clears (S, w, R); backtracking recomputes them from the
/// child alone as <parent(P), P, pi(P), r(P)>.
template <class Sink>
  requires SolutionSink<Sink>
EnumerationReport stateless_traverse(const SetSystem& sys, const RestrictedSolver& solver, Sink&& sink,
                                     const StatelessHooks& hooks = {}) {
  require_commutable(sys, "stateless_traverse");
  constexpr auto L = ChooseStrategy::LayeredMin;
  EnumerationReport rep;
  rep.algorithm = "stateless";
  RestrictedCounters counters;
  detail::Emitter<std::remove_reference_t<Sink>> em(sys, sink, rep);
  const std::size_t n = sys.ground_size();
  const Scope all = Scope::universe(n);
  bool stopped = false;
  std::int64_t peak = 0;
  {
    SlotMeter meter;
    for (Element z = 1; z <= n && !stopped; ++z) {
      if (!sys.in_z(z)) continue;
      TraversalState st;
      st.p = ElementSet{z};
      detail::grow(sys, st.p, all, L, std::nullopt, nullptr);
      if (source(sys, st.p) != z || !is_root(sys, st.p)) continue;
      ++rep.roots;
      std::size_t depth = 1;
      if (!em.enter(st.p, depth)) break;
      for (;;) {
        std::optional<ElementSet> child;
        if (detail::advance(sys, solver, st, counters, child)) {
          if (hooks.on_descend) {
            SlotPause pause;
            hooks.on_descend(*child, st.p, *st.w, *st.r);
          }
          ++depth;
          if (!em.enter(*child, depth)) {
            stopped = true;
            break;
          }
          st.p = std::move(*child);
          st.s.reset();
          st.w.reset();
          st.r.reset();
          continue;
        }
        if (!em.leave(st.p, depth)) {
          stopped = true;
          break;
        }
        if (depth == 1) break;
        // Backtrack: <P, S, w, R> <- <parent(P), P, pi(P), r(P)>.
        ElementSet core;
        Element pi = 0;
        {
          detail::Anchor a = detail::anchor(sys, st.p, L);
          assert(a.pi_index > 0);
          pi = a.order[a.pi_index];
          core = detail::prefix_set(a.order, a.pi_index);
        }
        st.s = std::move(st.p);
        st.r.reset();
        st.p = core;
        detail::grow(sys, st.p, all, L, std::nullopt, nullptr);
        core.insert(pi);
        detail::grow(sys, core, Scope(st.p, pi), L, std::nullopt, nullptr);
        st.r = std::move(core);
        st.w = pi;
        assert(st.r->contains(pi) && !st.p.contains(pi));
        if (hooks.on_backtrack) {
          SlotPause pause;
          hooks.on_backtrack(*st.s, st.p, pi, *st.r);
        }
        --depth;
      }
    }
    peak = meter.peak();
  }
  em.finish();
  rep.peak_aux_elements = peak;
  rep.restricted_calls = counters.calls;
  rep.restricted_solutions = counters.solutions;
  return rep;
}

}  // namespace maxsub
