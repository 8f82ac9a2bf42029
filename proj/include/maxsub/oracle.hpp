#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/element_set.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/set_system.hpp"

namespace maxsub {

inline constexpr std::size_t kDefaultOracleGuard = 16;

namespace detail {

struct Exhaustion {
  std::vector<Element> ground;
  std::vector<char> member;
  std::vector<char> strictly_below;  // some member strictly contains the mask
};

inline Exhaustion exhaust(const SetSystem& sys, std::size_t guard, const char* what) {
  const std::size_t n = sys.ground_size();
  if (n > guard || n > 26)
    throw SizeGuardError(std::string(what) + ": |U| = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard));
  Exhaustion e;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 1; i <= n; ++i) e.ground.push_back(static_cast<Element>(i));
  e.member.resize(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m) e.member[m] = sys.oracle()(ElementSet::from_mask(m, e.ground));
  std::vector<char> up(e.member);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t m = 0; m <= full; ++m)
      if (!((m >> i) & 1u) && up[m | (std::uint64_t{1} << i)]) up[m] = 1;
  e.strictly_below.assign(full + 1, 0);
  for (std::uint64_t m = 0; m <= full; ++m)
    for (std::size_t i = 0; i < n && !e.strictly_below[m]; ++i)
      if (!((m >> i) & 1u) && up[m | (std::uint64_t{1} << i)]) e.strictly_below[m] = 1;
  return e;
}

}  // namespace detail

/// Members of F with no proper superset in F, sorted. The empty set is
/// returned only when F = {empty}.
inline std::vector<ElementSet> brute_force_maximal(const SetSystem& sys,
                                                   std::size_t guard = kDefaultOracleGuard) {
  const detail::Exhaustion e = detail::exhaust(sys, guard, "brute_force_maximal");
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < e.member.size(); ++m)
    if (e.member[m] && !e.strictly_below[m]) out.push_back(ElementSet::from_mask(m, e.ground));
  std::sort(out.begin(), out.end());
  return out;
}

/// Lexicographically smallest maximal solution containing X.
inline ElementSet lexmin_complete(const SetSystem& sys, const ElementSet& x,
                                  std::size_t guard = kDefaultOracleGuard) {
  if (!sys.oracle()(x)) throw PreconditionError("lexmin_complete: X is not in F");
  const detail::Exhaustion e = detail::exhaust(sys, guard, "lexmin_complete");
  std::uint64_t xm = 0;
  for (Element v : x) xm |= std::uint64_t{1} << (v - 1);
  std::optional<ElementSet> best;
  for (std::uint64_t m = 0; m < e.member.size(); ++m) {
    if ((m & xm) != xm || !e.member[m] || e.strictly_below[m]) continue;
    ElementSet s = ElementSet::from_mask(m, e.ground);
    if (!best || s < *best) best = std::move(s);
  }
  if (!best) throw std::logic_error("lexmin_complete: no maximal superset");
  return *best;
}

}  // namespace maxsub
