#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "maxsub/errors.hpp"
#include "maxsub/graph.hpp"

namespace maxsub {

/// CNF over variables 1..num_vars; literal +j is x_j, -j is not x_j.
struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Node labels of the gadget: C1..Ck, then T1..Tn, F1..Fn, Y1..Yn.
struct GadgetLabels {
  std::size_t k = 0;
  std::size_t n = 0;
  Element c(std::size_t i) const { return static_cast<Element>(i); }
  Element t(std::size_t i) const { return static_cast<Element>(k + i); }
  Element f(std::size_t i) const { return static_cast<Element>(k + n + i); }
  Element y(std::size_t i) const { return static_cast<Element>(k + 2 * n + i); }
  std::size_t size() const { return k + 3 * n; }

  std::string name(Element v) const {
    if (v <= k) return "C" + std::to_string(v);
    const std::size_t r = v - k - 1;
    static constexpr char kind[] = {'T', 'F', 'Y'};
    return kind[r / n] + std::to_string(r % n + 1);
  }
};

/// Satisfiability gadget: some maximal BC-clique through Y1 holds every Ci
/// iff the formula is satisfiable.
inline BiColoredGraph sat_gadget(const Cnf& cnf) {
  if (cnf.clauses.empty() || cnf.num_vars == 0) throw PreconditionError("sat_gadget: empty formula");
  const GadgetLabels lab{cnf.clauses.size(), cnf.num_vars};
  const std::size_t total = lab.size();
  std::vector<char> black(total * total, 0);
  auto mark = [&](Element u, Element v) { black[(u - 1) * total + (v - 1)] = black[(v - 1) * total + (u - 1)] = 1; };

  for (std::size_t i = 1; i <= lab.n; ++i) {
    mark(lab.y(i), lab.t(i));
    mark(lab.y(i), lab.f(i));
    if (i > 1) {
      mark(lab.y(i), lab.t(i - 1));
      mark(lab.y(i), lab.f(i - 1));
    }
  }
  for (std::size_t i = 1; i <= lab.k; ++i) {
    for (int lit : cnf.clauses[i - 1]) {
      const auto j = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || j > lab.n) throw PreconditionError("sat_gadget: literal out of range");
      mark(lab.c(i), lit > 0 ? lab.t(j) : lab.f(j));
    }
  }

  BiColoredGraph g(total);
  for (Element u = 1; u <= total; ++u)
    for (Element v = u + 1; v <= total; ++v) {
      if (black[(u - 1) * total + (v - 1)]) {
        g.add_edge(u, v, EdgeColor::Black);
        continue;
      }
      const bool tf_pair = u > lab.k && u <= lab.k + lab.n && v == u + lab.n;
      if (!tf_pair) g.add_edge(u, v, EdgeColor::White);
    }
  return g;
}

/// Exhaustive satisfiability check for small formulas.
inline bool brute_force_satisfiable(const Cnf& cnf) {
  if (cnf.num_vars > 24) throw SizeGuardError("brute_force_satisfiable: too many variables");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.num_vars); ++a) {
    bool all = true;
    for (const auto& cl : cnf.clauses) {
      bool any = false;
      for (int lit : cl) {
        const bool val = (a >> (std::abs(lit) - 1)) & 1u;
        any = any || (lit > 0 ? val : !val);
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace maxsub
