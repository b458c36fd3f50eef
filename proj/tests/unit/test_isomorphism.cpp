#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "psdthrottle/generators.hpp"
#include "psdthrottle/isomorphism.hpp"
#include "support.hpp"

namespace psdthrottle {
namespace {

TEST(Corpus, CountsMatchKnownSequences) {
  // Graphs and connected graphs on n vertices up to isomorphism.
  const std::map<int, int> all = {{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}, {7, 1044}, {8, 12346}};
  const std::map<int, int> connected = {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}, {8, 11117}};
  std::map<int, int> seen_all, seen_connected;
  for (const Graph& g : testing::corpus()) {
    ++seen_all[g.order()];
    if (is_connected(g)) ++seen_connected[g.order()];
  }
  EXPECT_EQ(seen_all, all);
  EXPECT_EQ(seen_connected, connected);
}

TEST(Corpus, RegeneratesSmallOrders) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> fresh, stored;
    for (const Graph& g : enumerate_graphs(n)) fresh.push_back(encode_graph6(g));
    for (const Graph& g : testing::corpus()) {
      if (g.order() == n) stored.push_back(encode_graph6(g));
    }
    EXPECT_EQ(fresh, stored) << n;
  }
}

TEST(Isomorphism, RelabelingsAreIsomorphic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(9, rng());
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_EQ(invariant_key(g), invariant_key(h));
  }
}

TEST(Isomorphism, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(are_isomorphic(path(4), star(3)));
  EXPECT_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  EXPECT_FALSE(are_isomorphic(path(4), path(5)));
}

TEST(Trees, CountsMatchKnownSequence) {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(testing::all_trees(n).size(), expected[n - 1]) << n;
}

}  // namespace
}  // namespace psdthrottle
