#include <gtest/gtest.h>

#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/metrics.hpp"
#include "psdthrottle/subsets.hpp"

namespace psdthrottle {
namespace {

TEST(Metrics, PathCenterAndEndpoint) {
  const MetricTable m(path(5));
  EXPECT_EQ(m.radius(), 2);
  EXPECT_EQ(m.eccentricity(0), 4);
  EXPECT_EQ(m.diameter(), 4);
}

TEST(Metrics, CycleAndStarRadius) {
  EXPECT_EQ(radius(cycle(9)), 4);
  EXPECT_EQ(radius(star(5)), 1);
}

TEST(Metrics, DisconnectedMarkedUnreachable) {
  const Graph g = disjoint_union(path(2), path(3));
  const MetricTable m(g);
  EXPECT_FALSE(m.connected());
  EXPECT_EQ(m.distance(0, 3), MetricTable::kUnreachable);
  EXPECT_FALSE(m.radius().has_value());
  EXPECT_FALSE(m.eccentricity(0).has_value());
  EXPECT_THROW(radius(g), DisconnectedError);
  EXPECT_THROW(k_radius(g, 2), DisconnectedError);
}

TEST(Metrics, TriangleInequalityAndRadiusDefinition) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(12, seed, 1, 3);
    const MetricTable m(g);
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(m.distance(u, u), 0);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(m.distance(u, v), m.distance(v, u));
        if (m.distance(u, v) == MetricTable::kUnreachable) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (m.distance(u, w) == MetricTable::kUnreachable) continue;
          EXPECT_LE(m.distance(u, v), m.distance(u, w) + m.distance(w, v));
        }
      }
    }
    if (m.connected()) {
      int best = n;
      for (Vertex v = 0; v < n; ++v) {
        int ecc = 0;
        for (Vertex u = 0; u < n; ++u) ecc = std::max(ecc, m.distance(v, u));
        best = std::min(best, ecc);
      }
      EXPECT_EQ(m.radius(), best);
    }
  }
}

TEST(Metrics, KRadius) {
  EXPECT_EQ(k_radius(path(7), 2), 2);
  EXPECT_EQ(k_radius(cycle(8), 2), 2);
  for (const Graph& g : {path(9), cycle(10), hypercube(3), star(4)}) {
    EXPECT_EQ(k_radius(g, 1), radius(g));
    EXPECT_EQ(k_radius(g, g.order()), 0);
    for (int k = 1; k < g.order(); ++k) EXPECT_LE(k_radius(g, k + 1), k_radius(g, k));
  }
  EXPECT_THROW(k_radius(path(4), 0), ParameterError);
  EXPECT_THROW(k_radius(path(4), 5), ParameterError);
  EXPECT_THROW(k_radius(cycle(40), 20, 1000), SizeError);
}

TEST(Metrics, SetEccentricity) {
  const MetricTable m(path(7));
  EXPECT_EQ(m.set_eccentricity(VertexSet{1, 5}), 2);
  EXPECT_EQ(m.set_eccentricity(VertexSet{1, 3, 5}), 1);
  EXPECT_EQ(m.set_eccentricity(VertexSet{0}), 6);
}

int brute_force_alpha(const Graph& g) {
  int best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
    const VertexSet s(bits);
    bool independent = true;
    for (Vertex v : s) independent = independent && !g.neighbors(v).intersects(s);
    if (independent) best = std::max(best, s.size());
  }
  return best;
}

TEST(Metrics, IndependenceNumber) {
  EXPECT_EQ(independence_number(cycle(6)), 3);
  EXPECT_EQ(independence_number(complete_bipartite(3, 4)), 4);
  EXPECT_EQ(independence_number(complete(5)), 1);
  EXPECT_EQ(independence_number(Graph(4)), 4);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(14, seed, static_cast<int>(1 + seed % 3), 4);
    EXPECT_EQ(independence_number(g), brute_force_alpha(g)) << seed;
  }
  EXPECT_THROW(independence_number(cycle(33)), SizeError);
  EXPECT_EQ(independence_number(cycle(40), 40), 20);
}

}  // namespace
}  // namespace psdthrottle
