#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace maxsub;
using namespace testing_support;

namespace {

TEST(SetSystem, EmptySetIsAlwaysASolution) {
  EXPECT_TRUE(is_solution(clique_system(Graph::path(4)), ElementSet{}));
}

TEST(SetSystem, RejectsOracleWithoutEmptySet) {
  EXPECT_THROW(SetSystem("bad", 3, [](const ElementSet& x) { return !x.empty(); }), std::invalid_argument);
}

TEST(SetSystem, OutOfRangeElementIsADomainError) {
  const SetSystem sys = clique_system(Graph::path(3));
  EXPECT_THROW(is_solution(sys, set({1, 4})), std::domain_error);
}

TEST(SetSystem, PathEndpointsAreNotAClique) {
  const SetSystem sys = clique_system(Graph::path(3));
  EXPECT_FALSE(is_solution(sys, set({1, 3})));
  EXPECT_TRUE(is_solution(sys, set({1, 2})));
}

TEST(SetSystem, Fig1ExtensionOfOneTwo) {
  const SetSystem sys = bcclique_system(fig1());
  EXPECT_TRUE(is_solution(sys, set({1, 2})));
  EXPECT_EQ(extension_set(sys, set({1, 2})), set({5, 6}));
  EXPECT_TRUE(extension_set(sys, set({1, 2, 3, 5, 6})).empty());
  EXPECT_THROW(extension_set(sys, set({1, 4})), PreconditionError);
}

TEST(SetSystem, ExtensionSetMatchesSingleScans) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(8, 0.35, rng);
    const SetSystem sys = independent_set_system(g);
    const auto pred = independent_pred(g);
    ElementSet x;
    for (Element v = 1; v <= 8; ++v)
      if (rng() % 2 && pred(to_mask(x.with(v)))) x.insert(v);
    ElementSeq expected;
    for (Element v = 1; v <= 8; ++v)
      if (!x.contains(v) && pred(to_mask(x.with(v)))) expected.push_back(v);
    EXPECT_EQ(extension_set(sys, x), ElementSet::from_sorted(expected));
    for (Element e : extension_set(sys, x, Scope(set({2, 4, 6, 8})))) {
      EXPECT_TRUE(e % 2 == 0);
      EXPECT_TRUE(is_solution(sys, x.with(e)));
    }
  }
}

TEST(SetSystem, GoodSingletonsOfBcCliquesAreAllNodes) {
  EXPECT_EQ(good_singletons(bcclique_system(fig1())), set({1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(good_singletons(clique_system(Graph(4))), set({1, 2, 3, 4}));
}

// Simple paths of a tree that contain a leaf: Z is the leaf set.
TEST(SetSystem, GoodSingletonsOfLeafPathsAreLeaves) {
  Graph t(7);
  for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}}) t.add_edge(u, v);
  auto oracle = [t](const ElementSet& x) {
    if (x.empty()) return true;
    std::size_t edges = 0;
    bool leaf = false;
    for (Element u : x) {
      std::size_t deg = 0, tdeg = 0;
      for (Element v = 1; v <= 7; ++v) tdeg += t.adjacent(u, v);
      for (Element v : x) deg += t.adjacent(u, v);
      if (deg > 2) return false;
      edges += deg;
      leaf = leaf || tdeg == 1;
    }
    return leaf && edges / 2 + 1 == x.size();  // a forest with one component is a tree
  };
  const SetSystem sys("leaf-paths", 7, oracle);
  EXPECT_EQ(good_singletons(sys), set({1, 3, 5, 7}));
}

TEST(SetSystem, SourceIsSmallestGoodSingleton) {
  const SetSystem sys = bcclique_system(fig1());
  EXPECT_EQ(source(sys, set({3, 4, 5})), 3u);
  EXPECT_EQ(source(sys, set({7})), 7u);
}

TEST(Classify, CliquesAreHereditaryAndCommutable) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rep = classify_system(clique_system(random_graph(9, 0.5, rng)));
    EXPECT_TRUE(rep.hereditary);
    EXPECT_TRUE(rep.strongly_accessible);
    EXPECT_TRUE(rep.commutable);
    EXPECT_TRUE(rep.counterexamples.empty());
  }
}

TEST(Classify, Fig1BcCliquesAreCommutableNotHereditary) {
  const auto rep = classify_system(bcclique_system(fig1()));
  EXPECT_FALSE(rep.hereditary);
  EXPECT_TRUE(rep.strongly_accessible);
  EXPECT_TRUE(rep.commutable);
  EXPECT_TRUE(rep.connected_hereditary_witness);
}

TEST(Classify, RequiredVariantLosesConnectedHeredity) {
  const auto rep = classify_system(required_variant(bcclique_system(fig1()), set({4})));
  EXPECT_TRUE(rep.strongly_accessible);
  EXPECT_FALSE(rep.connected_hereditary_witness);
  EXPECT_FALSE(rep.hereditary);
  EXPECT_TRUE(rep.commutable);
}

TEST(Classify, DetectsNonStrongAccessibility) {
  // F = {{}, {1}, {1,2,3}}: {1} subset {1,2,3} but neither {1,2} nor {1,3} is in F.
  const SetSystem sys("gap", 3, [](const ElementSet& x) {
    return x.empty() || x == set({1}) || x == set({1, 2, 3});
  });
  const auto rep = classify_system(sys);
  EXPECT_FALSE(rep.strongly_accessible);
  EXPECT_FALSE(rep.commutable);
  ASSERT_FALSE(rep.counterexamples.empty());
}

TEST(Classify, GuardRejectsLargeGroundSets) {
  EXPECT_THROW(classify_system(clique_system(Graph(21))), SizeGuardError);
  EXPECT_NO_THROW(classify_system(clique_system(Graph(12)), 12));
}

TEST(Classify, OracleCallsAreCounted) {
  const SetSystem sys = bcclique_system(fig1());
  const auto before = sys.oracle_calls();
  is_solution(sys, set({1, 2}));
  EXPECT_EQ(sys.oracle_calls(), before + 1);
}

}  // namespace
