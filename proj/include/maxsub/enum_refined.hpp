#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxsub/canonical.hpp"
#include "maxsub/enum_basic.hpp"
#include "maxsub/report.hpp"
#include "maxsub/restricted.hpp"

namespace maxsub {

/// Calls and solutions seen by restricted solvers during one run.
struct RestrictedCounters {
  std::uint64_t calls = 0;
  std::uint64_t solutions = 0;
};

inline void require_commutable(const SetSystem& sys, const char* what) {
  if (!sys.declared_class().commutable)
    throw PreconditionError(std::string(what) + " needs a system declared commutable; '" + sys.name() +
                            "' is not (use the basic algorithm)");
}

namespace detail {

/// Candidate for the pair (R, s): core = complete({s}, R)|_w and
/// S = complete(core u {w}); kept iff <parent, pi, r, source>(S) = <P, w, R, s>.
inline std::optional<ElementSet> refined_candidate(const SetSystem& sys, const ElementSet& p, Element w,
                                                   const ElementSet& r, Element s) {
  constexpr auto L = ChooseStrategy::LayeredMin;
  const Scope all = Scope::universe(sys.ground_size());
  ElementSet d{s};
  d.reserve(r.size() + 1);
  if (!grow(sys, d, Scope(r), L, w, nullptr)) return std::nullopt;
  d.insert(w);
  grow(sys, d, all, L, std::nullopt, nullptr);
  if (source(sys, d) != s) return std::nullopt;

  ElementSet core;
  {
    Anchor a = anchor(sys, d, L);
    if (a.pi_index == 0 || a.order[a.pi_index] != w) return std::nullopt;
    core = prefix_set(a.order, a.pi_index);
  }
  {
    ElementSet par = core;
    grow(sys, par, all, L, std::nullopt, nullptr);
    if (par != p) return std::nullopt;
  }
  core.insert(w);
  grow(sys, core, Scope(p, w), L, std::nullopt, nullptr);
  if (core != r) return std::nullopt;
  return d;
}

}  // namespace detail

/// Resumable iteration over children(P) of the refined engine, for w ascending,
/// R in solver order (R != P) and s in (R n Z) \ {w} ascending.
class RefinedChildCursor {
 public:
  RefinedChildCursor(const SetSystem& sys, ElementSet p, const RestrictedSolver& solver,
                     RestrictedCounters* counters, std::optional<Element> only_w = std::nullopt)
      : sys_(&sys), solver_(&solver), counters_(counters), p_(std::move(p)),
        w_(only_w ? *only_w : 1), last_w_(only_w ? *only_w : static_cast<Element>(sys.ground_size())) {}

  const ElementSet& parent() const noexcept { return p_; }

  std::optional<ElementSet> next() {
    for (;;) {
      if (!loaded_) {
        if (w_ > last_w_) return std::nullopt;
        if (p_.contains(w_)) {
          ++w_;
          continue;
        }
        load();
      }
      for (; ri_ < rs_.size(); ++ri_, si_ = 0) {
        const ElementSet& r = rs_[ri_];
        while (si_ < r.size()) {
          const Element s = r[si_++];
          if (s == w_ || !sys_->in_z(s)) continue;
          if (auto d = detail::refined_candidate(*sys_, p_, w_, r, s)) return d;
        }
      }
      loaded_ = false;
      ++w_;
    }
  }

 private:
  void load() {
    rs_.clear();
    ri_ = si_ = 0;
    if (counters_) ++counters_->calls;
    solver_->for_each(*sys_, p_, w_, [&](const ElementSet& r) {
      if (counters_) ++counters_->solutions;
      if (r != p_) rs_.push_back(r);
      return true;
    });
    loaded_ = true;
  }

  const SetSystem* sys_;
  const RestrictedSolver* solver_;
  RestrictedCounters* counters_;
  ElementSet p_;
  Element w_;
  Element last_w_;
  bool loaded_ = false;
  std::vector<ElementSet> rs_;
  std::size_t ri_ = 0;
  std::size_t si_ = 0;
};

/// children(P, w) of the refined engine.
inline std::vector<ElementSet> children_refined(const SetSystem& sys, const ElementSet& p, Element w,
                                                const RestrictedSolver& solver,
                                                RestrictedCounters* counters = nullptr) {
  require_commutable(sys, "children_refined");
  std::vector<ElementSet> out;
  RefinedChildCursor cursor(sys, p, solver, counters, w);
  while (auto s = cursor.next()) out.push_back(std::move(*s));
  return out;
}

/// Refined engine: reverse search with restricted-problem child generation.
template <class Sink>
  requires SolutionSink<Sink>
EnumerationReport enumerate_refined(const SetSystem& sys, const RestrictedSolver& solver, Sink&& sink) {
  require_commutable(sys, "enumerate_refined");
  EnumerationReport rep;
  rep.algorithm = "refined";
  RestrictedCounters counters;
  detail::traverse(
      sys, ChooseStrategy::LayeredMin,
      [&](const ElementSet& p) { return RefinedChildCursor(sys, p, solver, &counters); }, sink, rep);
  rep.restricted_calls = counters.calls;
  rep.restricted_solutions = counters.solutions;
  return rep;
}

}  // namespace maxsub
