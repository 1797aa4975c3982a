#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pfg/digraph.hpp"
#include "pfg/tree.hpp"

namespace pfg {
namespace {

TEST(VertexSet, BasicOperations) {
  VertexSet a{1, 3};
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ(a.min(), 1);
  EXPECT_EQ((a | VertexSet{2}).size(), 3);
  EXPECT_TRUE(VertexSet{3}.is_subset_of(a));
  EXPECT_EQ(VertexSet::full(4).to_vector(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_THROW(a.insert(0), std::out_of_range);
  EXPECT_THROW(a.insert(65), std::out_of_range);
}

TEST(Digraph, RejectsBadEdges) {
  EXPECT_THROW(Digraph(3, {{1, 4}}), std::out_of_range);
  EXPECT_THROW(Digraph(3, {{0, 1}}), std::out_of_range);
  EXPECT_THROW(Digraph(3, {{1, 2}, {1, 2}}), std::invalid_argument);
  EXPECT_NO_THROW(Digraph(2, {{1, 1}}));
}

TEST(Digraph, ReachableFromVertex) {
  const Digraph d = fixtures::branching();
  EXPECT_EQ(d.reachable_from(3), (VertexSet{2, 3, 5}));
  EXPECT_EQ(Digraph(4).reachable_from(2), VertexSet{2});
  EXPECT_EQ(fixtures::shared_mapping().inverse_digraph().reachable_from(1), (VertexSet{1, 2, 4, 7}));
  EXPECT_THROW(d.reachable_from(Vertex{6}), std::out_of_range);
}

TEST(Digraph, ReachableFromSet) {
  const Digraph d = fixtures::branching();
  EXPECT_EQ(d.reachable_from(VertexSet{2, 4}), (VertexSet{2, 4, 5}));
  EXPECT_EQ(d.reachable_from(VertexSet{}), VertexSet{});
  EXPECT_EQ(d.reachable_from(VertexSet::full(5)), VertexSet::full(5));
}

TEST(Digraph, Quasiorder) {
  const Digraph d = fixtures::branching();
  EXPECT_TRUE(d.leq(1, 5));
  EXPECT_FALSE(d.leq(5, 1));
  for (Vertex v = 1; v <= 5; ++v) EXPECT_TRUE(d.leq(v, v));
}

TEST(Digraph, SelfLoopsDoNotChangeReach) {
  const Digraph plain(3, {{1, 2}});
  const Digraph looped(3, {{1, 1}, {1, 2}, {3, 3}});
  for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(plain.reachable_from(v), looped.reachable_from(v));
}

TEST(Digraph, EditsAndReverse) {
  const Digraph d = path_digraph(3);
  EXPECT_TRUE(d.has_edge({1, 2}));
  EXPECT_FALSE(d.without_edge({1, 2}).has_edge({1, 2}));
  EXPECT_TRUE(d.with_edge({3, 1}).leq(3, 2));
  EXPECT_TRUE(d.reversed().has_edge({2, 1}));
  EXPECT_EQ(d.out_degree(1), 1);
  EXPECT_EQ(d.in_degree(1), 0);
}

TEST(Filters, PathHasSuffixes) {
  for (int n = 1; n <= 6; ++n) {
    const auto f = path_digraph(n).filters();
    ASSERT_EQ(f.size(), static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      VertexSet suffix;
      for (int v = n - k + 1; v <= n; ++v) suffix.insert(v);
      EXPECT_EQ(f[k], suffix);
    }
  }
}

TEST(Filters, EdgelessHasAllSubsets) { EXPECT_EQ(Digraph(2).filters().size(), 4U); }

TEST(Filters, CounterTreeMatchesSubsetOracle) {
  const Digraph d = fixtures::counter_tree(Orientation::source).as_digraph();
  const auto brute = oracle::filters_by_subsets(d);
  std::set<std::uint64_t> ours;
  for (VertexSet f : d.filters()) ours.insert(f.bits());
  EXPECT_EQ(ours, brute);
  // Empty, {1}, {2}, {1,2}, {1,2,3}, [4].
  EXPECT_EQ(ours.size(), 6U);
}

TEST(Filters, RandomGraphsMatchSubsetOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Digraph d = oracle::random_digraph(n, 0.3, rng);
    std::set<std::uint64_t> ours;
    for (VertexSet f : d.filters()) ours.insert(f.bits());
    ASSERT_EQ(ours, oracle::filters_by_subsets(d)) << "trial " << trial;
    ASSERT_EQ(ours.size(), d.filters().size());
  }
}

TEST(Reach, MatchesExpansionAndDistributesOverUnion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Digraph d = oracle::random_digraph(n, 0.25, rng);
    for (Vertex v = 1; v <= n; ++v) {
      ASSERT_EQ(d.reachable_from(v).bits(), oracle::reach_mask(d, std::uint64_t{1} << (v - 1)));
    }
    const VertexSet a(rng() & VertexSet::full(n).bits());
    const VertexSet b(rng() & VertexSet::full(n).bits());
    ASSERT_EQ(d.reachable_from(a | b), d.reachable_from(a) | d.reachable_from(b));
  }
}

}  // namespace
}  // namespace pfg
