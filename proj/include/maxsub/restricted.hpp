#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/element_set.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/graph.hpp"
#include "maxsub/set_system.hpp"

namespace maxsub {

/// Solves restr(P, w): lists the maximal solutions R != P of the system
/// reduced to the ground set P u {w}. Streams must be deterministic so that
/// a caller can restart one and skip to a previously seen R.
class RestrictedSolver {
 public:
  /// Return false from the visitor to stop the stream.
  using Visit = std::function<bool(const ElementSet&)>;

  virtual ~RestrictedSolver() = default;
  virtual const char* name() const noexcept = 0;
  virtual void for_each(const SetSystem& sys, const ElementSet& p, Element w,
                        const Visit& visit) const = 0;

  std::vector<ElementSet> solve(const SetSystem& sys, const ElementSet& p, Element w) const {
    std::vector<ElementSet> out;
    for_each(sys, p, w, [&](const ElementSet& r) {
      out.push_back(r);
      return true;
    });
    return out;
  }
};

inline constexpr std::size_t kDefaultRestrictedGuard = 24;

/// Exhaustive solver: walks the subsets of P u {w} that contain w in
/// lexicographic order of their sorted sequences and emits those in F that
/// are maximal within P u {w}. Any maximal R != P must contain w, so nothing
/// is lost. Exponential in |P| by design.
class GenericRestrictedSolver final : public RestrictedSolver {
 public:
  explicit GenericRestrictedSolver(std::size_t guard = kDefaultRestrictedGuard) : guard_(guard) {}

  const char* name() const noexcept override { return "generic"; }

  void for_each(const SetSystem& sys, const ElementSet& p, Element w,
                const Visit& visit) const override {
    if (p.contains(w)) return;
    if (p.size() > guard_)
      throw SizeGuardError("restr_generic: |P| = " + std::to_string(p.size()) + " exceeds guard " +
                           std::to_string(guard_));
    const ElementSet ground = p.with(w);
    ElementSet cur;
    cur.reserve(ground.size());
    bool stop = false;
    dfs(sys, ground, w, 0, cur, visit, stop);
  }

 private:
  static bool maximal_within(const SetSystem& sys, const ElementSet& r, const ElementSet& ground) {
    for (Element e : ground)
      if (!r.contains(e) && sys.extends(r, e)) return false;
    return true;
  }

  // Pre-order over increasing extensions yields lexicographic order.
  void dfs(const SetSystem& sys, const ElementSet& ground, Element w, std::size_t from,
           ElementSet& cur, const Visit& visit, bool& stop) const {
    if (cur.contains(w) && sys.contains(cur) && maximal_within(sys, cur, ground)) {
      if (!visit(cur)) {
        stop = true;
        return;
      }
    }
    for (std::size_t i = from; i < ground.size() && !stop; ++i) {
      if (ground[i] > w && !cur.contains(w)) break;
      cur.append(ground[i]);
      dfs(sys, ground, w, i + 1, cur, visit, stop);
      cur.erase(ground[i]);
    }
  }

  std::size_t guard_;
};

/// BC-clique solver. With N the nodes of P adjacent to w, N u {w} is a
/// clique, and the black component of w inside it is the only maximal
/// BC-clique of P u {w} other than P.
class BcCliqueRestrictedSolver final : public RestrictedSolver {
 public:
  explicit BcCliqueRestrictedSolver(const BiColoredGraph& g) : g_(&g) {}

  const char* name() const noexcept override { return "bcclique"; }

  void for_each(const SetSystem&, const ElementSet& p, Element w, const Visit& visit) const override {
    if (auto r = solve_one(p, w)) visit(*r);
  }

  std::optional<ElementSet> solve_one(const ElementSet& p, Element w) const {
    if (p.contains(w)) return std::nullopt;
    if (!g_->is_bcclique(p)) throw PreconditionError("restr_bcclique: P is not a BC-clique");
    ElementSet comp{w};
    comp.reserve(p.size() + 1);
    // Grow by black edges among N = {v in P : v adjacent to w}.
    for (bool grew = true; grew;) {
      grew = false;
      for (Element v : p) {
        if (comp.contains(v) || !g_->adjacent(v, w)) continue;
        for (Element c : comp) {
          if (g_->black(v, c)) {
            comp.insert(v);
            grew = true;
            break;
          }
        }
      }
    }
    return comp;
  }

 private:
  const BiColoredGraph* g_;
};

}  // namespace maxsub
