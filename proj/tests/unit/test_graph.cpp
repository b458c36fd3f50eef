#include <gtest/gtest.h>

#include <random>

#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/graph.hpp"
#include "psdthrottle/subsets.hpp"

namespace psdthrottle {
namespace {

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), ParameterError);
  EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), ParameterError);
  EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), ParameterError);
  EXPECT_THROW(Graph(65), ParameterError);
}

TEST(Graph, AdjacencyIsSymmetric) {
  const Graph g = random_graph(20, 7);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      EXPECT_TRUE(g.neighbors(v).contains(u));
      EXPECT_TRUE(g.adjacent(u, v));
    }
    EXPECT_FALSE(g.neighbors(u).contains(u));
    EXPECT_EQ(g.closed_neighborhood(u), g.neighbors(u) | VertexSet::single(u));
  }
}

TEST(Graph, EdgesSortedAndCounted) {
  const Graph g(4, std::vector<Edge>{{3, 2}, {0, 1}, {1, 3}});
  const std::vector<Edge> expected = {{0, 1}, {1, 3}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.has_edge({2, 3}));
  EXPECT_FALSE(g.has_edge({0, 2}));
}

TEST(Graph, RelabelPreservesStructure) {
  const Graph g = path(4);
  const std::vector<Vertex> perm = {2, 0, 3, 1};
  const Graph h = relabel(g, perm);
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.has_edge({perm[e.u], perm[e.v]}));
  EXPECT_EQ(h.size(), g.size());
}

TEST(Graph, ComponentsAndTrees) {
  const Graph g = disjoint_union(path(3), cycle(4));
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4, 5, 6}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_tree(path(5)));
  EXPECT_FALSE(is_tree(cycle(5)));
  EXPECT_FALSE(is_tree(disjoint_union(path(2), path(2))));
  EXPECT_TRUE(is_tree(Graph(1)));
}

TEST(VertexSet, Algebra) {
  const VertexSet a{0, 2, 5};
  const VertexSet b{2, 3};
  EXPECT_EQ(a | b, (VertexSet{0, 2, 3, 5}));
  EXPECT_EQ(a & b, (VertexSet{2}));
  EXPECT_EQ(a - b, (VertexSet{0, 5}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.lowest(), 0);
  EXPECT_EQ(a.highest(), 5);
  EXPECT_EQ(a.to_string(), "{0,2,5}");
  EXPECT_EQ(a.to_string(true), "{1,3,6}");
  EXPECT_EQ(a.to_vector(), (std::vector<Vertex>{0, 2, 5}));
  EXPECT_TRUE((VertexSet{2}).is_subset_of(a));
  EXPECT_EQ(VertexSet::full(64).size(), 64);
}

TEST(Subsets, BinomialSaturates) {
  EXPECT_EQ(binomial(10, 3), 120U);
  EXPECT_EQ(binomial(5, 0), 1U);
  EXPECT_EQ(binomial(3, 5), 0U);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
}

TEST(Subsets, ColexOrderMatchesUnrank) {
  for (int k = 1; k <= 4; ++k) {
    std::uint64_t rank = 0;
    std::uint64_t previous = 0;
    for_each_k_subset(9, k, [&](VertexSet s) {
      EXPECT_EQ(s.size(), k);
      EXPECT_EQ(colex_unrank(k, rank), s);
      if (rank > 0) EXPECT_GT(s.bits(), previous);
      previous = s.bits();
      ++rank;
      return true;
    });
    EXPECT_EQ(rank, binomial(9, k));
  }
}

TEST(Subsets, RangeCoversSlice) {
  std::vector<std::uint64_t> seen;
  for_each_k_subset_range(10, 3, 17, 25, [&](VertexSet s) {
    seen.push_back(s.bits());
    return true;
  });
  ASSERT_EQ(seen.size(), 25U);
  for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], colex_unrank(3, 17 + i).bits());
}

}  // namespace
}  // namespace psdthrottle
