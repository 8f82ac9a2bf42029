// Walks the 8-node bi-colored example through the library: maximal
// BC-cliques from each engine, canonical orders and the parent relation.

#include <iostream>
#include <sstream>

#include "maxsub/maxsub.hpp"

using namespace maxsub;

namespace {

constexpr const char* kGraph = R"(# black edges
1 2 b
2 5 b
2 6 b
2 8 b
3 5 b
4 5 b
5 8 b
7 8 b
# white edges
1 3 w
1 5 w
1 6 w
2 3 w
2 7 w
3 4 w
3 6 w
5 6 w
5 7 w
)";

void print_order(const char* label, const CanonicalSolution& c) {
  std::cout << "  " << label << " order:";
  for (std::size_t j = 0; j < c.order.size(); ++j) {
    std::cout << ' ' << c.order[j];
    if (!c.layers.empty()) std::cout << "(L" << c.layers[j] << ')';
  }
  if (c.is_root) {
    std::cout << "  root\n";
  } else {
    std::cout << "  core " << c.core() << ", pi " << c.pi << '\n';
  }
}

}  // namespace

int main() {
  const BiColoredGraph g = parse_bicolored_text(kGraph);
  const SetSystem sys = bcclique_system(g);
  const BcCliqueRestrictedSolver solver(g);

  std::cout << "{1,2}^+ = " << extension_set(sys, ElementSet{1, 2}) << "\n\n";

  auto print = [](const ElementSet& s, std::size_t depth) {
    std::cout << "  depth " << depth << ": " << format_solution(s) << '\n';
  };
  std::cout << "basic engine (min-label choose):\n";
  enumerate_basic(sys, ChooseStrategy::MinElement, print);
  std::cout << "refined engine:\n";
  enumerate_refined(sys, solver, print);
  std::cout << "stateless engine:\n";
  const EnumerationReport rep = stateless_traverse(sys, solver, print);
  std::cout << "  " << rep.solution_count << " solutions, q = " << rep.max_solution_size
            << ", peak working memory " << *rep.peak_aux_elements << " element slots\n\n";

  for (const ElementSet& s : brute_force_maximal(sys)) {
    std::cout << s << '\n';
    for (ChooseStrategy strat : {ChooseStrategy::MinElement, ChooseStrategy::LayeredMin}) {
      const CanonicalSolution c = canonical_order(sys, s, strat);
      print_order(to_string(strat), c);
      if (auto p = parent(sys, c)) std::cout << "    parent " << *p << '\n';
    }
  }
}
