#include "psdthrottle/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "psdthrottle/error.hpp"
#include "psdthrottle/graph_io.hpp"

namespace psdthrottle {

namespace {

struct Refinement {
  std::vector<int> color;
  std::string key;
};

Refinement refine(const Graph& g) {
  const int n = g.order();
  Refinement out;
  out.color.resize(n);
  for (Vertex v = 0; v < n; ++v) out.color[v] = g.degree(v);
  out.key = std::to_string(n) + ":" + std::to_string(g.size());
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      signature[v].push_back(out.color[v]);
      std::vector<int> nbrs;
      for (Vertex w : g.neighbors(v)) nbrs.push_back(out.color[w]);
      std::sort(nbrs.begin(), nbrs.end());
      signature[v].insert(signature[v].end(), nbrs.begin(), nbrs.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    // Multiset of signatures (with multiplicities) goes into the key.
    out.key += '|';
    for (const auto& sig : distinct) {
      for (int x : sig) out.key += std::to_string(x) + ',';
      out.key += ';';
    }
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      out.color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return out;
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<Vertex> order;
  std::vector<Vertex> map;
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (used.contains(w) || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        ok = g.adjacent(v, order[i]) == h.adjacent(w, map[order[i]]);
      }
      if (!ok) continue;
      map[v] = w;
      used.insert(w);
      if (extend(depth + 1)) return true;
      used.erase(w);
    }
    return false;
  }
};

}  // namespace

std::string invariant_key(const Graph& g) { return refine(g).key; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const Refinement rg = refine(g);
  const Refinement rh = refine(h);
  if (rg.key != rh.key) return false;
  const int n = g.order();
  std::vector<int> class_size(n + 1, 0);
  for (int c : rg.color) ++class_size[c];
  Matcher m{g, h, rg.color, rh.color, {}, std::vector<Vertex>(n, -1), {}};
  // Small colour classes first, then stay adjacent to what is already placed.
  VertexSet placed;
  while (m.order.size() < static_cast<std::size_t>(n)) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed.contains(v)) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const bool va = g.neighbors(v).intersects(placed);
      const bool ba = g.neighbors(best).intersects(placed);
      if (va != ba ? va : class_size[rg.color[v]] < class_size[rg.color[best]]) best = v;
    }
    m.order.push_back(best);
    placed.insert(best);
  }
  return m.extend(0);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > 10) throw SizeError("enumerate_graphs supports 0 <= n <= 10");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> current{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::vector<Graph> next;
    std::map<std::string, std::vector<std::size_t>> buckets;
    const int old = order - 1;
    for (const Graph& base : current) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << old); ++mask) {
        std::vector<VertexSet> adjacency(order);
        for (Vertex v = 0; v < old; ++v) adjacency[v] = base.neighbors(v);
        adjacency[old] = VertexSet(mask);
        for (Vertex v : VertexSet(mask)) adjacency[v].insert(old);
        Graph candidate = Graph::from_adjacency(std::move(adjacency));
        auto& bucket = buckets[invariant_key(candidate)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](std::size_t i) { return are_isomorphic(next[i], candidate); });
        if (!seen) {
          bucket.push_back(next.size());
          next.push_back(std::move(candidate));
        }
      }
    }
    current = std::move(next);
  }
  std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keyed;
  for (std::size_t i = 0; i < current.size(); ++i) keyed.push_back({{current[i].size(), encode_graph6(current[i])}, i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(current.size());
  for (const auto& entry : keyed) out.push_back(current[entry.second]);
  return out;
}

}  // namespace psdthrottle
