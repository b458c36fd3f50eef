#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psdthrottle/vertex_set.hpp"

namespace psdthrottle {

/// Unordered pair {u, v}; stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Factor sizes of a graph built by cartesian_product. Vertex (x, x') has
/// index x * right_order + x'.
struct ProductLayout {
  int left_order = 0;
  int right_order = 0;

  bool operator==(const ProductLayout&) const = default;
};

/// Immutable simple undirected graph on vertices {0, ..., n-1}, n <= 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws ParameterError on self-loops, out-of-range endpoints or duplicates.
  Graph(int n, std::span<const Edge> edges);

  /// Throws ParameterError unless the masks describe a symmetric loopless relation.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  VertexSet closed_neighborhood(Vertex v) const { return adjacency_[v] | VertexSet::single(v); }
  int degree(Vertex v) const { return adjacency_[v].size(); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  bool has_edge(const Edge& e) const;
  bool contains(VertexSet s) const { return s.is_subset_of(vertices()); }

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  /// Union of N(v) over v in s.
  VertexSet neighborhood(VertexSet s) const;

  const std::optional<ProductLayout>& product_layout() const { return layout_; }
  Graph with_product_layout(ProductLayout layout) const;

  /// Same vertex count and edge set; the product tag is ignored.
  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  int edge_count_ = 0;
  std::optional<ProductLayout> layout_;
};

/// Graph relabeled so that vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace psdthrottle
