// A set system defined only by a membership test: vertex sets of a tree
// that induce a path with at least one leaf of the tree. Not hereditary,
// since dropping the leaf end of a path leaves a non-member.

#include <iostream>

#include "maxsub/maxsub.hpp"

using namespace maxsub;

int main() {
  Graph tree(9);
  for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}, {6, 8}, {8, 9}}) tree.add_edge(u, v);

  auto degree = [&](Element v) {
    std::size_t d = 0;
    for (Element u = 1; u <= tree.size(); ++u) d += tree.adjacent(u, v);
    return d;
  };

  SetSystem leaf_paths("leaf-paths", tree.size(), [&](const ElementSet& x) {
    if (x.empty()) return true;
    std::size_t edges = 0;
    bool has_leaf = false;
    for (Element u : x) {
      std::size_t inside = 0;
      for (Element v : x) inside += tree.adjacent(u, v);
      if (inside > 2) return false;
      edges += inside;
      has_leaf = has_leaf || degree(u) == 1;
    }
    // In a forest, |X| - 1 edges means X is connected.
    return has_leaf && edges / 2 + 1 == x.size();
  });

  const ClassificationReport c = classify_system(leaf_paths);
  std::cout << std::boolalpha << "strongly accessible: " << c.strongly_accessible << ", hereditary: " << c.hereditary
            << ", commutable: " << c.commutable << '\n';
  std::cout << "good singletons (leaves): " << good_singletons(leaf_paths) << '\n';

  const EnumerationReport rep = enumerate_basic(leaf_paths, ChooseStrategy::MinElement,
                                                [](const ElementSet& s, std::size_t) {
                                                  std::cout << format_solution(s) << '\n';
                                                });
  std::cout << rep.solution_count << " maximal leaf paths, " << rep.oracle_calls << " oracle calls\n";

  // The declaration defaults to "strongly accessible only"; opt in to the
  // refined engine once classification has confirmed commutability.
  if (!c.commutable) return 0;
  const SetSystem declared(leaf_paths.name(), leaf_paths.ground_size(), leaf_paths.oracle(),
                           SystemClass{true, false, false, true});
  const GenericRestrictedSolver solver;
  const EnumerationReport refined = enumerate_refined(declared, solver, [](const ElementSet&, std::size_t) {});
  std::cout << "refined engine: " << refined.solution_count << " solutions, " << refined.restricted_calls
            << " restricted calls\n";
}
