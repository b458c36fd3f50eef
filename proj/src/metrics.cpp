#include "psdthrottle/metrics.hpp"

#include <algorithm>
#include <limits>

#include "psdthrottle/error.hpp"
#include "psdthrottle/subsets.hpp"

namespace psdthrottle {

MetricTable::MetricTable(const Graph& g) : n_(g.order()) {
  dist_.assign(static_cast<std::size_t>(n_) * n_, kUnreachable);
  ecc_.assign(n_, 0);
  for (Vertex s = 0; s < n_; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int d = 0;
    while (!frontier.empty()) {
      for (Vertex v : frontier) dist_[static_cast<std::size_t>(s) * n_ + v] = d;
      ecc_[s] = d;
      frontier = g.neighborhood(frontier) - seen;
      seen |= frontier;
      ++d;
    }
    if (seen != g.vertices()) connected_ = false;
  }
}

std::optional<int> MetricTable::eccentricity(Vertex v) const {
  if (!connected_) return std::nullopt;
  return ecc_[v];
}

std::optional<int> MetricTable::radius() const {
  if (!connected_ || n_ == 0) return std::nullopt;
  return *std::min_element(ecc_.begin(), ecc_.end());
}

std::optional<int> MetricTable::diameter() const {
  if (!connected_ || n_ == 0) return std::nullopt;
  return *std::max_element(ecc_.begin(), ecc_.end());
}

std::optional<int> MetricTable::set_eccentricity(VertexSet s) const {
  if (s.empty()) return std::nullopt;
  int worst = 0;
  for (Vertex u = 0; u < n_; ++u) {
    int best = std::numeric_limits<int>::max();
    for (Vertex v : s) {
      const int d = distance(v, u);
      if (d != kUnreachable) best = std::min(best, d);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    worst = std::max(worst, best);
  }
  return worst;
}

int radius(const Graph& g) {
  if (g.order() == 0) throw ParameterError("radius of the empty graph is undefined");
  const auto r = MetricTable(g).radius();
  if (!r) throw DisconnectedError("graph is disconnected: radius is infinite");
  return *r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

int k_radius(const Graph& g, int k, std::uint64_t max_subsets) {
  const int n = g.order();
  if (k < 1 || k > n) throw ParameterError("k_radius needs 1 <= k <= n");
  const MetricTable table(g);
  if (!table.connected()) throw DisconnectedError("graph is disconnected: k-radius is infinite");
  if (binomial(n, k) > max_subsets) {
    throw SizeError("k_radius: C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceed the budget");
  }
  // e(S) <= r iff the radius-r balls around S cover V.
  std::vector<std::vector<VertexSet>> balls(n);
  const int diam = table.diameter().value_or(0);
  for (Vertex v = 0; v < n; ++v) {
    balls[v].assign(diam + 1, VertexSet{});
    for (Vertex u = 0; u < n; ++u) {
      for (int r = table.distance(v, u); r <= diam; ++r) balls[v][r].insert(u);
    }
  }
  int best = diam;
  for_each_k_subset(n, k, [&](VertexSet s) {
    for (int r = 0; r < best; ++r) {
      VertexSet covered;
      for (Vertex v : s) covered |= balls[v][r];
      if (covered == g.vertices()) {
        best = r;
        break;
      }
    }
    return best > 0;
  });
  return best;
}

namespace {

struct MisSearch {
  const Graph& g;
  int best = 0;

  void run(VertexSet candidates, int taken) {
    if (candidates.empty()) {
      best = std::max(best, taken);
      return;
    }
    if (taken + candidates.size() <= best) return;
    // Vertices of degree <= 1 inside the candidate set are always safe to take.
    Vertex pivot = -1;
    int pivot_degree = -1;
    for (Vertex v : candidates) {
      const int d = (g.neighbors(v) & candidates).size();
      if (d <= 1) {
        run(candidates - g.closed_neighborhood(v), taken + 1);
        return;
      }
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    run(candidates - g.closed_neighborhood(pivot), taken + 1);
    VertexSet without = candidates;
    without.erase(pivot);
    run(without, taken);
  }
};

}  // namespace

int independence_number(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw SizeError("independence_number: n = " + std::to_string(g.order()) + " exceeds the limit " +
                    std::to_string(limit));
  }
  MisSearch search{g};
  search.run(g.vertices(), 0);
  return search.best;
}

}  // namespace psdthrottle
