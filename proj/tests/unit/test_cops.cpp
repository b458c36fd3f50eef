#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "psdthrottle/cops.hpp"
#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/psd.hpp"
#include "psdthrottle/subsets.hpp"
#include "support.hpp"

namespace psdthrottle {
namespace {

TEST(MultisetIndex, RankRoundTrip) {
  for (int n = 1; n <= 7; ++n) {
    const MultisetIndex index(n, 4);
    for (int size = 0; size <= 4; ++size) {
      EXPECT_EQ(index.count(size), binomial(n + size - 1, size));
      for (std::uint64_t r = 0; r < index.count(size); ++r) {
        const std::vector<Vertex> m = index.unrank(size, r);
        ASSERT_EQ(static_cast<int>(m.size()), size);
        ASSERT_TRUE(std::is_sorted(m.begin(), m.end()));
        ASSERT_EQ(index.rank(m), r);
      }
    }
  }
}

TEST(CaptureTime, Examples) {
  EXPECT_EQ(capture_time(path(5), VertexSet{2}), 2);
  EXPECT_EQ(capture_time(path(5), VertexSet{2}), prop_time(path(5), {2}));
  EXPECT_TRUE(capture_time(cycle(4), VertexSet{0}).is_infinite());
  EXPECT_EQ(capture_time(complete(5), VertexSet{0}), 1);
  EXPECT_EQ(capture_time(path(3), VertexSet{1}), 1);
  EXPECT_EQ(capture_time(cycle(4), VertexSet::full(4)), 0);
  const std::vector<Vertex> stacked = {2, 2};
  EXPECT_EQ(capture_time(path(5), stacked), 2);
}

TEST(CaptureTime, DisconnectedGraphsLetTheRobberEscape) {
  const Graph g = disjoint_union(path(3), path(2));
  EXPECT_TRUE(capture_time(g, VertexSet{1}).is_infinite());
  EXPECT_EQ(capture_time(g, VertexSet({1, 3})), 1);
  EXPECT_TRUE(capture_time(Graph(2), VertexSet{0}).is_infinite());
}

TEST(CaptK, Examples) {
  const CaptureWitness p7 = capt_k(path(7), 1);
  EXPECT_EQ(p7.value, 3);
  EXPECT_EQ(p7.placement, VertexSet({3}));
  EXPECT_TRUE(capt_k(cycle(6), 1).value.is_infinite());
  EXPECT_EQ(capt_k(cycle(6), 2).value, 1);
  EXPECT_EQ(capt_k(cycle(6), 6).value, 0);
}

TEST(CopNumber, Examples) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(cop_number(random_tree(n, 40 + n)), 1);
  EXPECT_EQ(cop_number(cycle(7)), 2);
  EXPECT_EQ(cop_number(decode_graph6("IheA@GUAo")), 3);
  EXPECT_EQ(cop_number(Graph(3)), 3);
}

TEST(ThTimesCops, Examples) {
  EXPECT_EQ(th_times_cops(cycle(10)).th_times, 6);
  EXPECT_EQ(th_times_cops(path(7)).th_times, 4);
  EXPECT_EQ(th_times_cops(cycle(15)).th_times, 9);
  const CopThrottling k1 = th_times_cops(Graph(1));
  EXPECT_EQ(k1.th_times, 1);
  EXPECT_FALSE(k1.th_star.has_value());
}

TEST(CopGame, TableIsAFixpoint) {
  for (const Graph& g : testing::corpus_upto(5, false)) {
    for (int k = 1; k <= 2; ++k) ASSERT_TRUE(CopGame::solve(g, k).verify_fixpoint()) << encode_graph6(g);
  }
  EXPECT_TRUE(CopGame::solve(decode_graph6("IheA@GUAo"), 2).verify_fixpoint());
  EXPECT_TRUE(CopGame::solve(cycle(8), 3).verify_fixpoint());
}

TEST(CopGame, ValuesInvariantUnderRelabeling) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(8, rng());
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    const CopGame a = CopGame::solve(g, 2);
    const CopGame b = CopGame::solve(h, 2);
    for (Vertex c1 = 0; c1 < 8; ++c1) {
      for (Vertex c2 = c1; c2 < 8; ++c2) {
        for (Vertex r = 0; r < 8; ++r) {
          const std::vector<Vertex> cops = {c1, c2};
          const std::vector<Vertex> mapped = {perm[c1], perm[c2]};
          ASSERT_EQ(a.cops_to_move(cops, r), b.cops_to_move(mapped, perm[r]));
          ASSERT_EQ(a.robber_to_move(cops, r), b.robber_to_move(mapped, perm[r]));
        }
      }
    }
  }
}

TEST(CaptK, MoreCopsNeverSlower) {
  for (const Graph& g : testing::corpus_upto(6, true)) {
    ExtendedInt prev = ExtendedInt::infinity();
    for (int k = 1; k <= g.order(); ++k) {
      const ExtendedInt v = capt_k(g, k).value;
      ASSERT_LE(v, prev) << encode_graph6(g);
      prev = v;
    }
  }
}

TEST(CaptureTime, EqualsPropagationTimeOnSmallTreesAndCycles) {
  std::vector<Graph> graphs = testing::all_trees(7);
  for (int n = 4; n <= 7; ++n) graphs.push_back(cycle(n));
  for (const Graph& g : graphs) {
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
      const CopGame game = CopGame::solve(g, k);
      for_each_k_subset(n, k, [&](VertexSet s) {
        EXPECT_EQ(game.capture_time(s), prop_time(g, s));
        return true;
      });
    }
  }
}

TEST(CopGame, Budget) {
  CopOptions small;
  small.max_states = 100;
  EXPECT_THROW(CopGame::solve(cycle(10), 2, small), SizeError);
  EXPECT_THROW(capture_time(cycle(10), VertexSet({0, 5}), small), SizeError);
  EXPECT_THROW(CopGame::solve(cycle(5), 0), ParameterError);
}

}  // namespace
}  // namespace psdthrottle
