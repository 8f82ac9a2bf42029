#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace maxsub;
using namespace testing_support;

namespace {

TEST(Oracle, Fig1FrozenList) {
  const auto got = brute_force_maximal(bcclique_system(fig1()));
  const std::vector<ElementSet> want{set({1, 2, 3, 5, 6}), set({2, 5, 7, 8}), set({3, 4, 5})};
  EXPECT_EQ(got, maximal_sets(8, bcclique_pred(fig1())));
  EXPECT_EQ(got, want);
}

TEST(Oracle, OnlyEmptyFamily) {
  const SetSystem sys("empty", 3, [](const ElementSet& x) { return x.empty(); });
  EXPECT_EQ(brute_force_maximal(sys), std::vector<ElementSet>{ElementSet{}});
}

TEST(Oracle, OutputIsAnAntichainOfMaximalMembers) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_bicolored(10, 0.3, 0.4, rng);
    const SetSystem sys = bcclique_system(g);
    const auto sols = brute_force_maximal(sys);
    EXPECT_EQ(sols, maximal_sets(10, bcclique_pred(g)));
    for (const auto& s : sols) {
      EXPECT_TRUE(is_maximal(sys, s));
      EXPECT_EQ(complete(sys, s, ChooseStrategy::MinElement), s);
      for (const auto& t : sols)
        if (s != t) EXPECT_FALSE(s.is_subset_of(t));
    }
  }
}

TEST(Oracle, LexminComplete) {
  const SetSystem sys = bcclique_system(fig1());
  EXPECT_EQ(lexmin_complete(sys, set({5})), set({1, 2, 3, 5, 6}));
  EXPECT_EQ(lexmin_complete(sys, set({8})), set({2, 5, 7, 8}));
  EXPECT_EQ(lexmin_complete(sys, set({4})), set({3, 4, 5}));
  EXPECT_THROW(lexmin_complete(sys, set({1, 4})), PreconditionError);
}

TEST(Oracle, LexminIsAMaximalSupersetAndMinimal) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(9, 0.5, rng);
    const SetSystem sys = clique_system(g);
    const auto all = maximal_sets(9, clique_pred(g));
    for (Element v = 1; v <= 9; ++v) {
      const ElementSet got = lexmin_complete(sys, set({v}));
      ElementSet best;
      bool found = false;
      for (const auto& s : all)
        if (s.contains(v) && (!found || s < best)) best = s, found = true;
      EXPECT_EQ(got, best);
    }
  }
}

TEST(Oracle, Guard) {
  EXPECT_THROW(brute_force_maximal(clique_system(Graph(17))), SizeGuardError);
  EXPECT_NO_THROW(brute_force_maximal(clique_system(Graph(17)), 17));
}

}  // namespace
