#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psdthrottle/graph.hpp"
#include "psdthrottle/subsets.hpp"

namespace psdthrottle {

/// All-pairs hop distances with eccentricities and radius.
class MetricTable {
 public:
  static constexpr int kUnreachable = -1;

  explicit MetricTable(const Graph& g);

  int order() const { return n_; }
  /// kUnreachable when u and v lie in different components.
  int distance(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool connected() const { return connected_; }
  /// nullopt (infinite) on disconnected graphs.
  std::optional<int> eccentricity(Vertex v) const;
  std::optional<int> radius() const;
  std::optional<int> diameter() const;
  /// max over u of min over s in S of d(s, u); nullopt if some u is unreachable from S.
  std::optional<int> set_eccentricity(VertexSet s) const;

 private:
  int n_ = 0;
  bool connected_ = true;
  std::vector<int> dist_;
  std::vector<int> ecc_;
};

inline MetricTable metrics(const Graph& g) { return MetricTable(g); }

/// Radius of a connected graph; throws DisconnectedError otherwise.
int radius(const Graph& g);

/// Exact k-radius by enumerating all k-subsets. Throws DisconnectedError on
/// disconnected graphs, ParameterError unless 1 <= k <= n, and SizeError when
/// C(n, k) exceeds max_subsets.
int k_radius(const Graph& g, int k, std::uint64_t max_subsets = std::uint64_t{1} << 26);

/// Maximum independent set size by branch and bound. Throws SizeError when n > limit.
int independence_number(const Graph& g, int limit = 32);

}  // namespace psdthrottle
