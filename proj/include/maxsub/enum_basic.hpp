#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxsub/canonical.hpp"
#include "maxsub/report.hpp"
#include "maxsub/set_system.hpp"

namespace maxsub {

/// Streams the roots of the reverse-search forest: for each z in Z the set
/// complete({z}) is a root emitted from z iff its source is z and
/// complete(S[1]) = S. `visit` returns false to stop.
template <class Visit>
void find_roots(const SetSystem& sys, ChooseStrategy strat, Visit&& visit) {
  const std::size_t n = sys.ground_size();
  for (Element z = 1; z <= n; ++z) {
    if (!sys.in_z(z)) continue;
    ElementSet s{z};
    detail::grow(sys, s, Scope::universe(n), strat, std::nullopt, nullptr);
    if (source(sys, s) != z) continue;
    if (detail::anchor(sys, s, strat).pi_index != 0) continue;
    if (!visit(std::as_const(s))) return;
  }
}

inline std::vector<ElementSet> find_roots(const SetSystem& sys, ChooseStrategy strat) {
  std::vector<ElementSet> out;
  find_roots(sys, strat, [&](const ElementSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace detail {

/// <parent(S), pi(S), core(S)> == <P, w, X>.
inline bool is_basic_child(const SetSystem& sys, const ElementSet& s, const ElementSet& p,
                           Element w, const ElementSet& x, ChooseStrategy strat) {
  Anchor a = anchor(sys, s, strat);
  if (a.pi_index == 0 || a.order[a.pi_index] != w || a.pi_index != x.size()) return false;
  for (std::size_t i = 0; i < a.pi_index; ++i)
    if (!x.contains(a.order[i])) return false;
  a.order = {};
  ElementSet par = x;
  grow(sys, par, Scope::universe(sys.ground_size()), strat, std::nullopt, nullptr);
  return par == p;
}

}  // namespace detail

/// Resumable iteration over children(P) = U_w children(P, w) of the basic engine:
/// for every w and every X subset of P \ {w} with X u {w} in F (ascending
/// mask order), S = complete(X u {w}) is a child iff <parent, pi, core>(S) =
/// <P, w, X>. w may lie in P: under min-label choose pi(S) can belong to parent(S).
class BasicChildCursor {
 public:
  BasicChildCursor(const SetSystem& sys, ElementSet p, ChooseStrategy strat,
                   std::optional<Element> only_w = std::nullopt)
      : sys_(&sys), p_(std::move(p)), strat_(strat),
        w_(only_w ? *only_w : 1), last_w_(only_w ? *only_w : static_cast<Element>(sys.ground_size())) {
    if (p_.size() > 62)
      throw SizeGuardError("children_basic: |P| = " + std::to_string(p_.size()) + " exceeds 62");
  }

  const ElementSet& parent() const noexcept { return p_; }

  std::optional<ElementSet> next() {
    const Scope all = Scope::universe(sys_->ground_size());
    for (; w_ <= last_w_; ++w_, mask_ = 0) {
      if (mask_ == 0) {
        base_ = p_.without(w_);
        limit_ = std::uint64_t{1} << base_.size();
      }
      while (++mask_ < limit_) {
        const ElementSet x = ElementSet::from_mask(mask_, base_.view());
        ElementSet s = x.with(w_);
        if (!sys_->contains(s)) continue;
        detail::grow(*sys_, s, all, strat_, std::nullopt, nullptr);
        if (detail::is_basic_child(*sys_, s, p_, w_, x, strat_)) return s;
      }
    }
    return std::nullopt;
  }

 private:
  const SetSystem* sys_;
  ElementSet p_;
  ElementSet base_;  // P \ {w}
  ChooseStrategy strat_;
  Element w_;
  Element last_w_;
  std::uint64_t mask_ = 0;
  std::uint64_t limit_ = 0;
};

/// children(P, w) of the basic engine.
inline std::vector<ElementSet> children_basic(const SetSystem& sys, const ElementSet& p, Element w,
                                              ChooseStrategy strat) {
  std::vector<ElementSet> out;
  BasicChildCursor cursor(sys, p, strat, w);
  while (auto s = cursor.next()) out.push_back(std::move(*s));
  return out;
}

namespace detail {

/// Depth-first traversal from every root with an explicit stack of child
/// cursors; output follows the alternating-depth rule.
template <class MakeCursor, class Sink>
void traverse(const SetSystem& sys, ChooseStrategy strat, MakeCursor&& make_cursor, Sink& sink,
              EnumerationReport& rep) {
  Emitter<Sink> em(sys, sink, rep);
  using Cursor = decltype(make_cursor(std::declval<const ElementSet&>()));
  struct Frame {
    Cursor cursor;
    std::size_t depth;
  };
  std::vector<Frame> stack;
  bool stopped = false;
  find_roots(sys, strat, [&](const ElementSet& root) {
    ++rep.roots;
    if (!em.enter(root, 1)) return !(stopped = true);
    stack.push_back({make_cursor(root), 1});
    while (!stack.empty()) {
      if (auto child = stack.back().cursor.next()) {
        const std::size_t depth = stack.back().depth + 1;
        if (!em.enter(*child, depth)) return !(stopped = true);
        stack.push_back({make_cursor(*child), depth});
      } else {
        const Frame& top = stack.back();
        if (!em.leave(top.cursor.parent(), top.depth)) return !(stopped = true);
        stack.pop_back();
      }
    }
    return true;
  });
  em.finish();
}

}  // namespace detail

/// Basic engine: reverse search over any strongly accessible set system.
template <class Sink>
  requires SolutionSink<Sink>
EnumerationReport enumerate_basic(const SetSystem& sys, ChooseStrategy strat, Sink&& sink) {
  EnumerationReport rep;
  rep.algorithm = "basic";
  detail::traverse(
      sys, strat, [&](const ElementSet& p) { return BasicChildCursor(sys, p, strat); }, sink, rep);
  return rep;
}

}  // namespace maxsub
