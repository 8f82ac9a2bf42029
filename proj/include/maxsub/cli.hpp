#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxsub/canonical.hpp"
#include "maxsub/catalog.hpp"
#include "maxsub/enum_basic.hpp"
#include "maxsub/enum_refined.hpp"
#include "maxsub/enum_stateless.hpp"
#include "maxsub/io.hpp"
#include "maxsub/mccis.hpp"
#include "maxsub/oracle.hpp"
#include "maxsub/restricted.hpp"
#include "maxsub/sat_gadget.hpp"

namespace maxsub::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsageError = 2, kVerifyFailed = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system = "bcclique";
  std::string algorithm = "basic";
  bool canonical = false;
  bool stats = false;
  bool verify = false;
  std::string required;  // comma/space separated ids
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

inline const std::vector<std::string>& system_names() {
  static const std::vector<std::string> names{"clique", "independent-set", "bcclique", "required-bcclique"};
  return names;
}

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"basic", "refined", "stateless"};
  return names;
}

inline ElementSet parse_id_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  ElementSeq ids;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1) throw UsageError("bad element id '" + tok + "'");
    ids.push_back(static_cast<Element>(v));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ElementSet::from_sorted(std::move(ids));
}

/// A parsed input together with the set system and restricted solver it implies.
struct Instance {
  std::shared_ptr<const Graph> graph;
  std::shared_ptr<const BiColoredGraph> bicolored;
  std::optional<SetSystem> sys;
  std::unique_ptr<RestrictedSolver> solver;

  const SetSystem& system() const { return *sys; }
};

inline Instance make_instance(const std::string& system, std::istream& in, const std::string& required) {
  Instance inst;
  const bool needs_required = system == "required-bcclique";
  if (needs_required && required.empty()) throw UsageError("system 'required-bcclique' needs --required");
  if (system == "clique" || system == "independent-set") {
    inst.graph = std::make_shared<const Graph>(parse_graph(in));
    inst.sys = system == "clique" ? clique_system(inst.graph) : independent_set_system(inst.graph);
  } else if (system == "bcclique" || needs_required) {
    inst.bicolored = std::make_shared<const BiColoredGraph>(parse_bicolored(in));
    inst.sys = bcclique_system(inst.bicolored);
  } else {
    throw UsageError("unknown system '" + system + "'");
  }
  if (!required.empty()) {
    const ElementSet req = parse_id_list(required);
    if (!req.empty() && req.back() > inst.sys->ground_size())
      throw UsageError("--required id " + std::to_string(req.back()) + " exceeds the ground set");
    inst.sys = required_variant(*inst.sys, req);
    inst.solver = std::make_unique<GenericRestrictedSolver>();
  } else if (inst.bicolored) {
    inst.solver = std::make_unique<BcCliqueRestrictedSolver>(*inst.bicolored);
  } else {
    inst.solver = std::make_unique<GenericRestrictedSolver>();
  }
  return inst;
}

inline ChooseStrategy strategy_for(const std::string& algorithm) {
  return algorithm == "basic" ? ChooseStrategy::MinElement : ChooseStrategy::LayeredMin;
}

/// Runs the named engine; refined and stateless refuse non-commutable systems.
template <class Sink>
EnumerationReport run_engine(const SetSystem& sys, const RestrictedSolver& solver,
                             const std::string& algorithm, Sink&& sink) {
  if (algorithm == "basic") return enumerate_basic(sys, ChooseStrategy::MinElement, sink);
  if (algorithm != "refined" && algorithm != "stateless")
    throw UsageError("unknown algorithm '" + algorithm + "'");
  if (!sys.declared_class().commutable)
    throw UsageError("algorithm '" + algorithm + "' needs a commutable system; '" + sys.name() +
                     "' is not declared commutable (use --algorithm basic)");
  if (algorithm == "refined") return enumerate_refined(sys, solver, sink);
  return stateless_traverse(sys, solver, sink);
}

inline nlohmann::json to_json(const EnumerationReport& rep) {
  nlohmann::json j;
  j["algorithm"] = rep.algorithm;
  j["solution_count"] = rep.solution_count;
  j["max_solution_size"] = rep.max_solution_size;
  j["roots"] = rep.roots;
  j["delay_samples"] = rep.delay_samples;
  j["max_delay"] = rep.max_delay;
  j["total_seconds"] = rep.total_seconds;
  j["peak_aux_elements"] = rep.peak_aux_elements ? nlohmann::json(*rep.peak_aux_elements) : nlohmann::json();
  j["oracle_calls"] = rep.oracle_calls;
  j["restricted_calls"] = rep.restricted_calls;
  j["restricted_solutions"] = rep.restricted_solutions;
  j["aborted"] = rep.aborted;
  return j;
}

namespace detail {

inline std::string join_order(const ElementSeq& order) {
  std::string s;
  for (Element e : order) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e);
  }
  return s;
}

/// Maps exceptions to exit codes and prints them.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SizeGuardError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace detail

/// Prints one maximal solution per line, optionally followed by a tab and its
/// canonical order; --stats writes the report as JSON to `err`.
inline int cmd_enumerate(const Options& opt, std::istream& input, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Instance inst = make_instance(opt.system, input, opt.required);
    const SetSystem& sys = inst.system();
    const ChooseStrategy strat = strategy_for(opt.algorithm);
    std::vector<std::string> canon;
    auto sink = [&](const ElementSet& s, std::size_t) {
      out << format_solution(s);
      if (opt.canonical) out << '\t' << detail::join_order(::maxsub::detail::anchor(sys, s, strat).order);
      out << '\n';
      return static_cast<bool>(out);
    };
    const EnumerationReport rep = run_engine(sys, *inst.solver, opt.algorithm, sink);
    if (opt.stats) err << to_json(rep).dump() << '\n';
    if (!out) throw std::ios_base::failure("write to standard output failed");
    return static_cast<int>(kOk);
  });
}

/// Lists maximal common connected induced subgraph isomorphisms of A and B
/// as "u:x ..." lines via the product graph.
inline int cmd_mccis(const Options& opt, std::istream& a_in, std::istream& b_in, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, [&] {
    const Graph a = parse_graph(a_in);
    const Graph b = parse_graph(b_in);
    if (a.size() == 0 || b.size() == 0) throw UsageError("mccis: both graphs need at least one node");
    auto prod = std::make_shared<const BiColoredGraph>(product_graph(a, b));
    const SetSystem sys = bcclique_system(prod);
    const BcCliqueRestrictedSolver solver(*prod);
    std::vector<VertexPairMap> maps;
    auto sink = [&](const ElementSet& s, std::size_t) {
      maps.push_back(map_back(s, a, b));
      out << maps.back().to_string() << '\n';
      return static_cast<bool>(out);
    };
    const EnumerationReport rep = run_engine(sys, solver, opt.algorithm, sink);
    if (opt.stats) err << to_json(rep).dump() << '\n';
    if (!opt.verify) return static_cast<int>(kOk);

    const std::set<VertexPairMap> expected = mccis_oracle(a, b);
    const std::set<VertexPairMap> got(maps.begin(), maps.end());
    bool ok = got.size() == maps.size();
    if (!ok) err << "verify: engine emitted duplicate mappings\n";
    for (const auto& m : expected)
      if (!got.count(m)) {
        err << "verify: missing " << m.to_string() << '\n';
        ok = false;
      }
    for (const auto& m : got)
      if (!expected.count(m)) {
        err << "verify: unexpected " << m.to_string() << '\n';
        ok = false;
      }
    err << "verify: " << (ok ? "pass" : "FAIL") << " (" << got.size() << " engine, " << expected.size()
        << " oracle)\n";
    return static_cast<int>(ok ? kOk : kVerifyFailed);
  });
}

/// Writes the satisfiability gadget of a DIMACS formula with a label legend.
inline int cmd_gadget(std::istream& cnf_in, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Cnf cnf = parse_dimacs(cnf_in);
    if (cnf.clauses.empty() || cnf.num_vars == 0) throw UsageError("gadget: formula has no clauses");
    const BiColoredGraph g = sat_gadget(cnf);
    const GadgetLabels lab{cnf.clauses.size(), cnf.num_vars};
    std::vector<std::string> legend{"satisfiability gadget: " + std::to_string(lab.n) + " variables, " +
                                    std::to_string(lab.k) + " clauses"};
    std::string line;
    for (Element v = 1; v <= lab.size(); ++v) {
      line += (line.empty() ? "" : " ") + std::to_string(v) + "=" + lab.name(v);
      if (v % 8 == 0 || v == lab.size()) {
        legend.push_back(line);
        line.clear();
      }
    }
    write_bicolored(out, g, legend);
    if (!out) throw std::ios_base::failure("write failed");
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  std::string status;  // PASS, FAIL or SKIP
  std::string detail;
};

namespace detail {

using Solutions = std::vector<ElementSet>;

struct EngineRun {
  std::string algorithm;
  Solutions emitted;  // in emission order
};

inline CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), "PASS", std::move(detail)}; }
inline CheckResult fail(std::string name, std::string detail) { return {std::move(name), "FAIL", std::move(detail)}; }
inline CheckResult skip(std::string name, std::string detail) { return {std::move(name), "SKIP", std::move(detail)}; }

inline std::string show(const ElementSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

inline Solutions sorted_unique(Solutions v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline CheckResult check_classification(const SetSystem& sys) {
  if (sys.ground_size() > kDefaultClassifyGuard) return skip("classification", "ground set above guard");
  const ClassificationReport c = classify_system(sys);
  const SystemClass& d = sys.declared_class();
  std::string bad;
  if (!c.strongly_accessible) bad += " not strongly accessible;";
  if (d.hereditary && !c.hereditary) bad += " declared hereditary but is not;";
  if (d.connected_hereditary && !c.connected_hereditary_witness) bad += " declared connected hereditary but is not;";
  if (d.commutable && !c.commutable) bad += " declared commutable but is not;";
  std::ostringstream os;
  os << "sa=" << c.strongly_accessible << " hered=" << c.hereditary << " conn-hered=" << c.connected_hereditary_witness
     << " commutable=" << c.commutable;
  if (!bad.empty()) {
    if (!c.counterexamples.empty()) bad += " e.g. " + c.counterexamples.front().detail;
    return fail("classification", os.str() + ";" + bad);
  }
  return pass("classification", os.str());
}

inline CheckResult check_oracle(const SetSystem& sys, const EngineRun& run) {
  const std::string name = "oracle-" + run.algorithm;
  if (sys.ground_size() > kDefaultOracleGuard) return skip(name, "ground set above guard");
  Solutions expected = brute_force_maximal(sys);
  std::erase_if(expected, [](const ElementSet& s) { return s.empty(); });
  const Solutions got = sorted_unique(run.emitted);
  if (got.size() != run.emitted.size()) return fail(name, "duplicate solutions emitted");
  if (got != expected)
    return fail(name, std::to_string(got.size()) + " emitted vs " + std::to_string(expected.size()) + " maximal");
  return pass(name, std::to_string(got.size()) + " solutions");
}

inline CheckResult check_agreement(const std::vector<EngineRun>& runs) {
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (sorted_unique(runs[i].emitted) != sorted_unique(runs[0].emitted) ||
        runs[i].emitted.size() != runs[0].emitted.size())
      return fail("engines-agree", runs[0].algorithm + " vs " + runs[i].algorithm + " differ");
  return pass("engines-agree", std::to_string(runs.size()) + " engines");
}

inline std::vector<ChooseStrategy> strategies(const SetSystem& sys) {
  if (sys.declared_class().commutable) return {ChooseStrategy::MinElement, ChooseStrategy::LayeredMin};
  return {ChooseStrategy::MinElement};
}

inline CheckResult check_prefix_closure(const SetSystem& sys, const Solutions& sols) {
  for (ChooseStrategy strat : strategies(sys))
    for (const ElementSet& s : sols) {
      const CanonicalSolution c = canonical_order(sys, s, strat);
      for (std::size_t j = 1; j <= s.size(); ++j)
        if (!sys.contains(c.prefix(j)))
          return fail("prefix-closure", show(c.prefix(j)) + " not in F (" + to_string(strat) + ")");
    }
  return pass("prefix-closure");
}

inline CheckResult check_order_monotone(const SetSystem& sys, const Solutions& sols) {
  for (ChooseStrategy strat : strategies(sys))
    for (const ElementSet& s : sols) {
      const CanonicalSolution c = canonical_order(sys, s, strat);
      for (std::size_t j = 1; j <= s.size(); ++j) {
        const ElementSet t = complete(sys, c.prefix(j), strat);
        if (compare(canonical_order(sys, t, strat), c) == std::strong_ordering::greater)
          return fail("order-monotone", "complete(" + show(c.prefix(j)) + ") succeeds " + show(s));
      }
      if (auto p = parent(sys, c)) {
        if (*p == s || compare(canonical_order(sys, *p, strat), c) != std::strong_ordering::less)
          return fail("order-monotone", "parent of " + show(s) + " does not precede it");
      }
    }
  return pass("order-monotone");
}

inline CheckResult check_z_coverage(const SetSystem& sys, const Solutions& sols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const ElementSet& s : sols) {
    // Random chains of members inside S: each must meet Z and extend within S.
    for (int trial = 0; trial < 8; ++trial) {
      ElementSet x;
      const ElementSet z_in_s = set_intersection(s, sys.good_singletons());
      if (z_in_s.empty()) return fail("z-coverage", show(s) + " has no good singleton");
      x.insert(z_in_s[rng() % z_in_s.size()]);
      while (x.size() < s.size()) {
        if (!source_or_none(sys, x)) return fail("z-coverage", show(x) + " misses Z");
        const ElementSet ext = extension_set(sys, x, Scope(s));
        if (ext.empty()) return fail("z-coverage", show(x) + " has no extension inside " + show(s));
        x.insert(ext[rng() % ext.size()]);
      }
    }
  }
  return pass("z-coverage");
}

/// Samples (X, Y, A): X grown by layered choose from t inside A, Y a random
/// chain of extensions of X inside A. If b = choose(X, A) still extends
/// X u Y, it must also be choose(X u Y, A) with the same start.
inline CheckResult check_choose_stability(const SetSystem& sys, const Solutions& sols, std::uint64_t seed) {
  if (!sys.declared_class().commutable) return skip("choose-stability", "system not declared commutable");
  if (sols.empty()) return skip("choose-stability", "no solutions");
  constexpr auto L = ChooseStrategy::LayeredMin;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = sys.ground_size();
  std::size_t tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    ElementSet a = sols[rng() % sols.size()];
    a.insert(static_cast<Element>(1 + rng() % n));
    const ElementSet za = set_intersection(a, sys.good_singletons());
    if (za.empty()) continue;
    const Element t = za[rng() % za.size()];
    const Scope scope(a);
    ElementSet x{t};
    for (std::size_t steps = rng() % a.size(); steps > 0; --steps) {
      auto c = ::maxsub::detail::choose_next(sys, x, scope, L, t);
      if (!c) break;
      x.insert(*c);
    }
    const auto b = ::maxsub::detail::choose_next(sys, x, scope, L, t);
    if (!b) continue;
    ElementSet xy = x;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
      const ElementSet ext = extension_set(sys, xy, scope);
      if (ext.empty()) break;
      xy.insert(ext[rng() % ext.size()]);
    }
    if (xy.contains(*b) || !sys.extends(xy, *b)) continue;
    ++tested;
    const auto b2 = ::maxsub::detail::choose_next(sys, xy, scope, L, t);
    if (!b2 || *b2 != *b)
      return fail("choose-stability", "X=" + show(x) + " X+Y=" + show(xy) + " A=" + show(a) + " start " +
                                  std::to_string(t) + ": " + std::to_string(*b) + " vs " +
                                  (b2 ? std::to_string(*b2) : std::string("none")));
  }
  return pass("choose-stability", std::to_string(tested) + " samples");
}

inline CheckResult check_restricted(const SetSystem& sys, const RestrictedSolver& solver, const Solutions& sols) {
  if (std::string(solver.name()) == "generic") return skip("restricted-solvers", "only the generic solver applies");
  const GenericRestrictedSolver generic;
  std::size_t pairs = 0;
  for (const ElementSet& p : sols)
    for (Element w = 1; w <= sys.ground_size(); ++w) {
      if (p.contains(w)) continue;
      ++pairs;
      if (solver.solve(sys, p, w) != generic.solve(sys, p, w))
        return fail("restricted-solvers", "P=" + show(p) + " w=" + std::to_string(w));
    }
  return pass("restricted-solvers", std::to_string(pairs) + " (P, w) pairs");
}

}  // namespace detail

/// Runs classification, every applicable engine, the oracle comparison and
/// the invariant checks, printing a PASS/FAIL/SKIP table.
inline int cmd_verify(const Options& opt, std::istream& input, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Instance inst = make_instance(opt.system, input, opt.required);
    const SetSystem& sys = inst.system();
    std::vector<detail::EngineRun> runs;
    for (const std::string& alg : algorithm_names()) {
      if (alg != "basic" && !sys.declared_class().commutable) continue;
      detail::EngineRun run{alg, {}};
      run_engine(sys, *inst.solver, alg, [&](const ElementSet& s, std::size_t) { run.emitted.push_back(s); });
      runs.push_back(std::move(run));
    }
    const detail::Solutions sols = detail::sorted_unique(runs.front().emitted);

    std::vector<std::function<CheckResult()>> checks;
    checks.push_back([&] { return detail::check_classification(sys); });
    for (const auto& run : runs) checks.push_back([&] { return detail::check_oracle(sys, run); });
    checks.push_back([&] { return detail::check_agreement(runs); });
    checks.push_back([&] { return detail::check_prefix_closure(sys, sols); });
    checks.push_back([&] { return detail::check_order_monotone(sys, sols); });
    checks.push_back([&] { return detail::check_z_coverage(sys, sols, opt.seed); });
    checks.push_back([&] { return detail::check_choose_stability(sys, sols, opt.seed); });
    checks.push_back([&] { return detail::check_restricted(sys, *inst.solver, sols); });

    std::vector<CheckResult> results(checks.size());
    const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
    for (std::size_t start = 0; start < checks.size(); start += jobs) {
      std::vector<std::future<CheckResult>> batch;
      for (std::size_t i = start; i < std::min(checks.size(), start + jobs); ++i)
        batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, checks[i]));
      for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }

    bool ok = true;
    for (const auto& r : results) {
      out << std::left << std::setw(5) << r.status << ' ' << std::setw(22) << r.name << r.detail << '\n';
      ok = ok && r.status != "FAIL";
    }
    out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    return static_cast<int>(ok ? kOk : kVerifyFailed);
  });
}

}  // namespace maxsub::cli
