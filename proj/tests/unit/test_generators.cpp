#include <gtest/gtest.h>

#include <algorithm>

#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/isomorphism.hpp"

namespace psdthrottle {
namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d = g.degree_sequence();
  std::sort(d.begin(), d.end());
  return d;
}

TEST(Generators, Cycle6) {
  const Graph g = generate(Family::cycle, std::vector<int>{6});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(sorted_degrees(g), std::vector<int>(6, 2));
}

TEST(Generators, Hypercube3) {
  const Graph g = generate(Family::hypercube, std::vector<int>{3});
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(sorted_degrees(g), std::vector<int>(8, 3));
}

TEST(Generators, CompleteBipartite23) {
  const Graph g = generate(Family::complete_bipartite, std::vector<int>{2, 3});
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_TRUE(g.has_edge({0, 2}));
  EXPECT_FALSE(g.has_edge({0, 1}));
}

TEST(Generators, DegreeSequences) {
  for (int n = 2; n <= 20; ++n) {
    std::vector<int> expected(n, 2);
    expected[0] = expected[1] = 1;
    if (n == 2) expected = {1, 1};
    EXPECT_EQ(sorted_degrees(path(n)), expected) << n;
  }
  for (int n = 3; n <= 20; ++n) EXPECT_EQ(sorted_degrees(cycle(n)), std::vector<int>(n, 2));
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(sorted_degrees(hypercube(d)), std::vector<int>(1 << d, d));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(sorted_degrees(complete(n)), std::vector<int>(n, n - 1));
  const Graph s = star(5);
  EXPECT_EQ(s.degree(0), 5);
  const std::vector<int> parts = {1, 2, 3};
  const Graph m = complete_multipartite(parts);
  EXPECT_EQ(m.order(), 6);
  EXPECT_EQ(m.size(), 1 * 2 + 1 * 3 + 2 * 3);
  EXPECT_EQ(m.degree(0), 5);
  EXPECT_EQ(m.degree(5), 3);
}

TEST(Generators, InvalidParameters) {
  EXPECT_THROW(cycle(2), ParameterError);
  EXPECT_THROW(path(0), ParameterError);
  EXPECT_THROW(hypercube(-1), ParameterError);
  EXPECT_THROW(generate(Family::cycle, std::vector<int>{}), ParameterError);
  EXPECT_THROW(generate(Family::random_tree, std::vector<int>{5}), ParameterError);
  EXPECT_THROW(parse_family("wheel"), ParameterError);
}

TEST(Generators, RandomTreesAreSeededTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 15);
    const Graph t = random_tree(n, seed);
    EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(t.order(), n);
    EXPECT_EQ(t, random_tree(n, seed));
  }
}

TEST(Generators, PrueferDecoding) {
  // {3, 3, 3} on 5 vertices is the star centred at 3.
  const Graph t = tree_from_pruefer(5, std::vector<int>{3, 3, 3});
  EXPECT_EQ(t.degree(3), 4);
  EXPECT_TRUE(is_tree(t));
}

TEST(Generators, FamilyNamesRoundTrip) {
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star, Family::complete_bipartite,
                   Family::complete_multipartite, Family::hypercube, Family::random_tree}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
}

}  // namespace
}  // namespace psdthrottle
