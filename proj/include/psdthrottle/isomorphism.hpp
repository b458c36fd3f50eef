#pragma once

#include <string>
#include <vector>

#include "psdthrottle/graph.hpp"

namespace psdthrottle {

/// Isomorphism-invariant fingerprint from colour refinement. Isomorphic graphs
/// always share a key; distinct keys prove non-isomorphism.
std::string invariant_key(const Graph& g);

/// Exact test: refinement colours prune a backtracking search for a bijection.
bool are_isomorphic(const Graph& g, const Graph& h);

/// One representative of every isomorphism class of graphs of order n
/// (vertex-extension plus dedup), sorted by edge count then graph6. Practical for n <= 9.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace psdthrottle
