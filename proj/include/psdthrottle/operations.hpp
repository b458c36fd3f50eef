#pragma once

#include "psdthrottle/graph.hpp"

namespace psdthrottle {

enum class Factor { left, right };

/// G box H. Vertex (x, x') is x * H.order() + x'; the result carries a ProductLayout.
Graph cartesian_product(const Graph& g, const Graph& h);

/// {x : (x, .) in S} for Factor::left, {x' : (., x') in S} for Factor::right.
/// Throws PreconditionError when `product` has no product layout.
VertexSet project_to_factor(const Graph& product, VertexSet s, Factor which);

Graph complement(const Graph& g);

/// Replaces e = {u, w} by u - x - w with the new vertex x = n. Throws EdgeError if e is absent.
Graph subdivide_edge(const Graph& g, const Edge& e);

/// Throws EdgeError if e is absent.
Graph delete_edge(const Graph& g, const Edge& e);

/// Subgraph induced on `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

}  // namespace psdthrottle
