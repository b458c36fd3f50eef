#pragma once

#include <string>
#include <vector>

#include "psdthrottle/graph.hpp"
#include "psdthrottle/graph_io.hpp"
#include "psdthrottle/isomorphism.hpp"

namespace psdthrottle::testing {

inline std::string data_path(const std::string& name) { return std::string(PSDTHROTTLE_TEST_DATA) + "/" + name; }

/// Every graph on 1..8 vertices up to isomorphism.
inline const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = read_graph6_file(data_path("graphs_n1-8.g6"));
  return graphs;
}

inline std::vector<Graph> corpus_upto(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (const Graph& g : corpus()) {
    if (g.order() <= max_n && (!connected_only || is_connected(g))) out.push_back(g);
  }
  return out;
}

/// Non-isomorphic trees on n vertices, grown leaf by leaf.
inline std::vector<Graph> all_trees(int n) {
  std::vector<Graph> level = {Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, m - 1});
        Graph grown(m, edges);
        bool seen = false;
        for (const Graph& h : next) {
          if (are_isomorphic(h, grown)) {
            seen = true;
            break;
          }
        }
        if (!seen) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace psdthrottle::testing
