#include "psdthrottle/graph.hpp"

#include <algorithm>
#include <functional>

#include "psdthrottle/error.hpp"

namespace psdthrottle {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw ParameterError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adjacency_.assign(n, VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw ParameterError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (adjacency_[e.u].contains(e.v)) {
      throw ParameterError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
    ++edge_count_;
  }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  Graph g;
  int degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!adjacency[v].is_subset_of(VertexSet::full(n))) {
      throw ParameterError("adjacency of vertex " + std::to_string(v) + " leaves the vertex range");
    }
    if (adjacency[v].contains(v)) throw ParameterError("self-loop at vertex " + std::to_string(v));
    for (Vertex w : adjacency[v]) {
      if (!adjacency[w].contains(v)) throw ParameterError("adjacency is not symmetric");
    }
    degree_sum += adjacency[v].size();
  }
  g.adjacency_ = std::move(adjacency);
  g.edge_count_ = degree_sum / 2;
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const VertexSet& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(const Edge& e) const {
  return e.u >= 0 && e.v < order() && e.u != e.v && adjacency_[e.u].contains(e.v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const VertexSet& nbrs : adjacency_) out.push_back(nbrs.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adjacency_[v];
  return out;
}

Graph Graph::with_product_layout(ProductLayout layout) const {
  if (layout.left_order * layout.right_order != order()) {
    throw ParameterError("product layout does not match the vertex count");
  }
  Graph g = *this;
  g.layout_ = layout;
  return g;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw ParameterError("permutation has the wrong length");
  VertexSet seen;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen.contains(p)) throw ParameterError("not a permutation");
    seen.insert(p);
  }
  std::vector<VertexSet> adjacency(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adjacency[perm[v]].insert(perm[w]);
  }
  return Graph::from_adjacency(std::move(adjacency));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = g.neighborhood(frontier) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

}  // namespace psdthrottle
