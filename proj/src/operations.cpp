#include "psdthrottle/operations.hpp"

#include <string>
#include <vector>

#include "psdthrottle/error.hpp"

namespace psdthrottle {

namespace {

std::string edge_name(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng * nh > Graph::kMaxVertices) throw ParameterError("cartesian product has more than 64 vertices");
  std::vector<Edge> edges;
  for (Vertex x = 0; x < ng; ++x) {
    for (const Edge& e : h.edges()) edges.emplace_back(x * nh + e.u, x * nh + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (Vertex y = 0; y < nh; ++y) edges.emplace_back(e.u * nh + y, e.v * nh + y);
  }
  return Graph(ng * nh, edges).with_product_layout({ng, nh});
}

VertexSet project_to_factor(const Graph& product, VertexSet s, Factor which) {
  const auto& layout = product.product_layout();
  if (!layout) throw PreconditionError("graph carries no product layout; projection is undefined");
  if (!product.contains(s)) throw ParameterError("vertex set is not contained in the product graph");
  VertexSet out;
  for (Vertex v : s) out.insert(which == Factor::left ? v / layout->right_order : v % layout->right_order);
  return out;
}

Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> adjacency(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adjacency[v] = all - g.closed_neighborhood(v);
  return Graph::from_adjacency(std::move(adjacency));
}

Graph subdivide_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw EdgeError("edge " + edge_name(e) + " is not in the graph");
  if (g.order() + 1 > Graph::kMaxVertices) throw ParameterError("subdivision would exceed 64 vertices");
  const Vertex x = g.order();
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  edges.emplace_back(e.u, x);
  edges.emplace_back(x, e.v);
  return Graph(g.order() + 1, edges);
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw EdgeError("edge " + edge_name(e) + " is not in the graph");
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!g.contains(keep)) throw ParameterError("induced_subgraph: set leaves the vertex range");
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) edges.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(next, edges);
}

}  // namespace psdthrottle
