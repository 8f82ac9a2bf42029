#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxsub/element_set.hpp"
#include "maxsub/errors.hpp"

namespace maxsub {

/// Structural class a set system is known (declared) to belong to. The
/// refined and stateless engines only accept commutable systems.
struct SystemClass {
  bool strongly_accessible = true;
  bool hereditary = false;
  bool connected_hereditary = false;
  bool commutable = false;
};

/// A ground set {1..n} together with a membership oracle for F.
///
/// Instances are immutable after construction. The only mutable part is the
/// oracle-call counter, which is atomic and shared between copies; it backs
/// the oracle_calls figure of enumeration reports.
class SetSystem {
 public:
  using Oracle = std::function<bool(const ElementSet&)>;
  /// Optional fast test for X u {y} in F, valid when X is in F.
  using ExtendsFn = std::function<bool(const ElementSet&, Element)>;

  SetSystem(std::string name, std::size_t ground_size, Oracle oracle, SystemClass declared = {},
            ExtendsFn extends = {}, std::optional<std::size_t> q_bound = std::nullopt)
      : name_(std::move(name)),
        ground_size_(ground_size),
        oracle_(std::move(oracle)),
        extends_(std::move(extends)),
        declared_(declared),
        q_bound_(q_bound),
        calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
    if (!oracle_) throw std::invalid_argument("set system '" + name_ + "' has no oracle");
    if (!oracle_(ElementSet{}))
      throw std::invalid_argument("set system '" + name_ + "' rejects the empty set");
    in_z_.assign(ground_size_ + 1, 0);
    ElementSeq z;
    for (Element e = 1; e <= ground_size_; ++e) {
      if (oracle_(ElementSet{e})) {
        in_z_[e] = 1;
        z.push_back(e);
      }
    }
    z.shrink_to_fit();
    z_ = ElementSet::from_sorted(std::move(z));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t ground_size() const noexcept { return ground_size_; }
  const SystemClass& declared_class() const noexcept { return declared_; }
  std::optional<std::size_t> q_bound() const noexcept { return q_bound_; }

  /// X in F. Elements must lie in 1..ground_size().
  bool contains(const ElementSet& x) const {
    check_range(x);
    calls_->fetch_add(1, std::memory_order_relaxed);
    return oracle_(x);
  }

  /// X u {y} in F, for X already known to be in F and y not in X.
  bool extends(const ElementSet& x, Element y) const {
    if (extends_) {
      calls_->fetch_add(1, std::memory_order_relaxed);
      return extends_(x, y);
    }
    return contains(x.with(y));
  }

  bool in_z(Element e) const { return e >= 1 && e <= ground_size_ && in_z_[e] != 0; }
  const ElementSet& good_singletons() const noexcept { return z_; }

  std::uint64_t oracle_calls() const { return calls_->load(std::memory_order_relaxed); }

  const Oracle& oracle() const noexcept { return oracle_; }
  const ExtendsFn& extends_fn() const noexcept { return extends_; }

  void check_range(const ElementSet& x) const {
    if (!x.empty() && (x.front() < 1 || x.back() > ground_size_))
      throw std::domain_error("element outside ground set 1.." + std::to_string(ground_size_));
  }

 private:
  std::string name_;
  std::size_t ground_size_;
  Oracle oracle_;
  ExtendsFn extends_;
  SystemClass declared_;
  std::optional<std::size_t> q_bound_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
  std::vector<char> in_z_;
  ElementSet z_;
};

/// The set A that complete/choose draw candidates from: either the whole
/// ground set or an explicit set, optionally with one extra element (so that
/// P u {w} never has to be materialised).
class Scope {
 public:
  static Scope universe(std::size_t n) { return Scope(n); }
  explicit Scope(const ElementSet& set, std::optional<Element> extra = std::nullopt)
      : set_(&set), extra_(extra && !set.contains(*extra) ? extra : std::nullopt) {}

  bool contains(Element e) const {
    if (!set_) return e >= 1 && e <= n_;
    return set_->contains(e) || (extra_ && *extra_ == e);
  }

  /// Calls f(e) in ascending order until f returns true; returns whether it did.
  template <class F>
  bool find_if(F&& f) const {
    if (!set_) {
      for (Element e = 1; e <= n_; ++e)
        if (f(e)) return true;
      return false;
    }
    bool extra_done = !extra_;
    for (Element e : *set_) {
      if (!extra_done && *extra_ < e) {
        extra_done = true;
        if (f(*extra_)) return true;
      }
      if (f(e)) return true;
    }
    return !extra_done && f(*extra_);
  }

 private:
  explicit Scope(std::size_t n) : n_(n) {}

  const ElementSet* set_ = nullptr;
  std::size_t n_ = 0;
  std::optional<Element> extra_;
};

inline bool is_solution(const SetSystem& sys, const ElementSet& x) { return sys.contains(x); }

/// X^+_A = {a in A \ X : X u {a} in F}.
inline ElementSet extension_set(const SetSystem& sys, const ElementSet& x, const Scope& a) {
  if (!sys.contains(x)) throw PreconditionError("extension_set: X is not in F");
  ElementSeq out;
  a.find_if([&](Element e) {
    if (!x.contains(e) && sys.extends(x, e)) out.push_back(e);
    return false;
  });
  return ElementSet::from_sorted(std::move(out));
}

inline ElementSet extension_set(const SetSystem& sys, const ElementSet& x) {
  return extension_set(sys, x, Scope::universe(sys.ground_size()));
}

/// Z = {x : {x} in F}.
inline const ElementSet& good_singletons(const SetSystem& sys) { return sys.good_singletons(); }

/// Smallest element of X n Z.
inline Element source(const SetSystem& sys, const ElementSet& x) {
  if (x.empty()) throw PreconditionError("source of the empty set");
  for (Element e : x)
    if (sys.in_z(e)) return e;
  throw PreconditionError("set has no good singleton; it is not in F or F is not strongly accessible");
}

inline std::optional<Element> source_or_none(const SetSystem& sys, const ElementSet& x) {
  for (Element e : x)
    if (sys.in_z(e)) return e;
  return std::nullopt;
}

/// Whether X in F admits no extension in the whole ground set.
inline bool is_maximal(const SetSystem& sys, const ElementSet& x) {
  if (!sys.contains(x)) return false;
  for (Element e = 1; e <= sys.ground_size(); ++e)
    if (!x.contains(e) && sys.extends(x, e)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive classification (test utility).

struct Counterexample {
  std::string property;
  std::string detail;
};

struct ClassificationReport {
  bool accessible = true;
  bool strongly_accessible = true;
  bool hereditary = true;
  bool connected_hereditary_witness = true;
  bool commutable = true;
  std::vector<Counterexample> counterexamples;
};

inline constexpr std::size_t kDefaultClassifyGuard = 20;

namespace detail {

inline std::string mask_text(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1u) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

inline bool mask_connected(std::uint64_t mask, const std::vector<std::uint64_t>& adj) {
  if (mask == 0) return true;
  std::uint64_t seen = mask & (~mask + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

}  // namespace detail

/// Checks accessibility, strong accessibility, heredity, connected heredity
/// (against the pair graph {uv : {u,v} in F}) and the commutable property by
/// exhaustive enumeration of F. Only meant for small ground sets.
inline ClassificationReport classify_system(const SetSystem& sys,
                                            std::size_t guard = kDefaultClassifyGuard) {
  const std::size_t n = sys.ground_size();
  if (n > guard || n > 26)
    throw SizeGuardError("classify_system: |U| = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(std::min<std::size_t>(guard, 26)));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Element> ground(n);
  for (std::size_t i = 0; i < n; ++i) ground[i] = static_cast<Element>(i + 1);

  std::vector<char> member(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m) member[m] = sys.contains(ElementSet::from_mask(m, ground));

  // up[m]: some member of F contains m.
  std::vector<char> up(member);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t m = 0; m <= full; ++m)
      if (!((m >> i) & 1u) && up[m | (std::uint64_t{1} << i)]) up[m] = 1;

  std::vector<std::uint64_t> pair_adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (member[(std::uint64_t{1} << i) | (std::uint64_t{1} << j)]) {
        pair_adj[i] |= std::uint64_t{1} << j;
        pair_adj[j] |= std::uint64_t{1} << i;
      }

  ClassificationReport rep;
  bool implication = true;
  auto note = [&](bool& flag, const char* property, std::string detail) {
    if (flag) rep.counterexamples.push_back({property, std::move(detail)});
    flag = false;
  };

  for (std::uint64_t x = 0; x <= full; ++x) {
    if (!member[x]) continue;
    bool some_removal = x == 0;
    std::uint64_t ext = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (x & bit) {
        const std::uint64_t smaller = x & ~bit;
        if (member[smaller]) {
          some_removal = true;
        } else {
          if (rep.hereditary)
            note(rep.hereditary, "hereditary",
                 detail::mask_text(x) + " in F but " + detail::mask_text(smaller) + " is not");
          if (rep.connected_hereditary_witness && smaller != 0 &&
              detail::mask_connected(smaller, pair_adj))
            note(rep.connected_hereditary_witness, "connected_hereditary",
                 "connected subset " + detail::mask_text(smaller) + " of " + detail::mask_text(x) +
                     " is not in F");
        }
      } else if (member[x | bit]) {
        ext |= bit;
      }
    }
    if (!some_removal)
      note(rep.accessible, "accessible", detail::mask_text(x) + " has no removable element");
    if (rep.connected_hereditary_witness && !detail::mask_connected(x, pair_adj))
      note(rep.connected_hereditary_witness, "connected_hereditary",
           detail::mask_text(x) + " is not connected in the pair graph");

    if (rep.strongly_accessible) {
      const std::uint64_t free = full & ~x & ~ext;
      for (std::uint64_t sub = free; sub; sub = (sub - 1) & free) {
        if (member[x | sub]) {
          note(rep.strongly_accessible, "strongly_accessible",
               detail::mask_text(x) + " subset of " + detail::mask_text(x | sub) +
                   " but no single element of the difference extends it");
          break;
        }
      }
    }

    if (implication && x != 0) {
      for (std::uint64_t a = ext; a && implication; a &= a - 1) {
        for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
          const std::uint64_t both = x | (a & (~a + 1)) | (b & (~b + 1));
          if (!member[both] && up[both]) {
            bool flag = true;
            note(flag, "commutable",
                 detail::mask_text(x) + " with both single extensions but " +
                     detail::mask_text(both) + " not in F while contained in a member");
            implication = false;
            break;
          }
        }
      }
    }
  }
  rep.commutable = rep.strongly_accessible && implication;
  return rep;
}

}  // namespace maxsub
