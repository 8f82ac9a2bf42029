#include <gtest/gtest.h>

#include "naive.hpp"

using namespace maxsub;
using namespace testing_support;

namespace {

TEST(PrefixClosure, EveryCanonicalPrefixIsAMember) {
  std::size_t checked = 0;
  for (const Instance& in : full_matrix())
    for (ChooseStrategy strat : strategies_for(in))
      for (const ElementSet& s : maximal_sets(in.n, in.pred)) {
        const CanonicalSolution c = canonical_order(*in.sys, s, strat);
        ASSERT_EQ(c.order.size(), s.size()) << in.label();
        for (std::size_t j = 1; j <= s.size(); ++j) {
          ASSERT_TRUE(in.pred(to_mask(c.prefix(j)))) << in.label() << ' ' << s << " j=" << j;
          ++checked;
        }
      }
  EXPECT_GT(checked, 1000u);
}

TEST(PrefixClosure, CanonicalOrdersMatchNaiveConstruction) {
  for (const Instance& in : full_matrix())
    for (ChooseStrategy strat : strategies_for(in))
      for (const ElementSet& s : maximal_sets(in.n, in.pred)) {
        const CanonicalSolution c = canonical_order(*in.sys, s, strat);
        const NaiveOrder nv = naive_canonical(in.pred, in.n, to_mask(s), strat);
        ASSERT_EQ(std::vector<Element>(c.order.begin(), c.order.end()), nv.order) << in.label() << ' ' << s;
        if (strat == ChooseStrategy::LayeredMin)
          for (std::size_t j = 0; j < nv.layers.size(); ++j) ASSERT_EQ(c.layers[j], nv.layers[j]) << in.label();
      }
}

}  // namespace
