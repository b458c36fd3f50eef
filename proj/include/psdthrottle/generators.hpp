#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "psdthrottle/graph.hpp"

namespace psdthrottle {

enum class Family {
  path,
  cycle,
  complete,
  star,
  complete_bipartite,
  complete_multipartite,
  hypercube,
  random_tree,
};

std::string_view to_string(Family family);
/// Throws ParameterError for unknown names.
Family parse_family(std::string_view name);

// Labelings:
//   path(n)                 0-1-...-(n-1)
//   cycle(n)                path plus {n-1, 0}
//   star(t)                 K_{1,t}, center 0, leaves 1..t
//   complete_multipartite   parts contiguous, in parameter order
//   hypercube(d)            vertex = binary index, edges flip one bit
//   random_tree(n, seed)    Pruefer sequence drawn from mt19937_64(seed)
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph complete_bipartite(int s, int t);
Graph complete_multipartite(std::span<const int> parts);
Graph hypercube(int d);
Graph random_tree(int n, std::uint64_t seed);

/// Pruefer decoding; entries in [0, n), length n - 2.
Graph tree_from_pruefer(int n, std::span<const int> sequence);

Graph generate(Family family, std::span<const int> params, std::optional<std::uint64_t> seed = {});

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Uniform G(n, 1/2) style random graph, each edge present with probability
/// numerator/denominator.
Graph random_graph(int n, std::uint64_t seed, int numerator = 1, int denominator = 2);

}  // namespace psdthrottle
