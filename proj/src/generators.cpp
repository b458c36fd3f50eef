#include "psdthrottle/generators.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "psdthrottle/error.hpp"

namespace psdthrottle {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::star, "star"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::hypercube, "hypercube"},
    {Family::random_tree, "random_tree"},
}};

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

void require_count(std::span<const int> params, std::size_t count, std::string_view family) {
  require(params.size() == count, std::string(family) + " expects " + std::to_string(count) +
                                      " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw ParameterError("unknown family '" + std::string(name) + "'");
}

Graph path(int n) {
  require(n >= 1 && n <= Graph::kMaxVertices, "path needs 1 <= n <= 64");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3 && n <= Graph::kMaxVertices, "cycle needs 3 <= n <= 64");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require(n >= 1 && n <= Graph::kMaxVertices, "complete needs 1 <= n <= 64");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star(int leaves) {
  require(leaves >= 1 && leaves < Graph::kMaxVertices, "star needs 1 <= leaves <= 63");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int s, int t) {
  const std::array<int, 2> parts{s, t};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "complete_multipartite needs at least one part");
  int n = 0;
  for (int p : parts) {
    require(p >= 1, "complete_multipartite parts must be positive");
    n += p;
  }
  require(n <= Graph::kMaxVertices, "complete_multipartite has more than 64 vertices");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 6, "hypercube needs 0 <= d <= 6");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(n, edges);
}

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
  require(n >= 2 && n <= Graph::kMaxVertices, "Pruefer decoding needs 2 <= n <= 64");
  require(static_cast<int>(sequence.size()) == n - 2, "Pruefer sequence must have length n - 2");
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    require(x >= 0 && x < n, "Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1 && n <= Graph::kMaxVertices, "random_tree needs 1 <= n <= 64");
  if (n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  std::vector<int> sequence(n - 2);
  // Plain modulo keeps the draw identical across standard libraries.
  for (int& x : sequence) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  return tree_from_pruefer(n, sequence);
}

Graph generate(Family family, std::span<const int> params, std::optional<std::uint64_t> seed) {
  const std::string_view name = to_string(family);
  switch (family) {
    case Family::path:
      require_count(params, 1, name);
      return path(params[0]);
    case Family::cycle:
      require_count(params, 1, name);
      return cycle(params[0]);
    case Family::complete:
      require_count(params, 1, name);
      return complete(params[0]);
    case Family::star:
      require_count(params, 1, name);
      return star(params[0]);
    case Family::complete_bipartite:
      require_count(params, 2, name);
      return complete_bipartite(params[0], params[1]);
    case Family::complete_multipartite:
      return complete_multipartite(params);
    case Family::hypercube:
      require_count(params, 1, name);
      return hypercube(params[0]);
    case Family::random_tree:
      require_count(params, 1, name);
      require(seed.has_value(), "random_tree requires a seed");
      return random_tree(params[0], *seed);
  }
  throw ParameterError("unhandled family");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  require(n <= Graph::kMaxVertices, "disjoint union has more than 64 vertices");
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(n, edges);
}

Graph random_graph(int n, std::uint64_t seed, int numerator, int denominator) {
  require(n >= 0 && n <= Graph::kMaxVertices, "random_graph needs 0 <= n <= 64");
  require(denominator > 0 && numerator >= 0 && numerator <= denominator, "bad edge probability");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % static_cast<std::uint64_t>(denominator)) < numerator) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace psdthrottle
