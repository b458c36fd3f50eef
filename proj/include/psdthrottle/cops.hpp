#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psdthrottle/extended_int.hpp"
#include "psdthrottle/graph.hpp"

namespace psdthrottle {

struct CopOptions {
  /// Cap on sequential-move table entries, sum_j C(n+j-1, j) C(n+k-j-1, k-j) = C(2n+k-1, k).
  std::uint64_t max_states = 10'000'000;
};

enum class Side { cops, robber };

/// Cops may share vertices; the multiset is kept sorted.
struct GamePosition {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Side to_move = Side::cops;
};

/// Ranks multisets of a fixed size over {0..n-1} in colex order of the
/// strictly increasing shifted sequence a_i + i.
class MultisetIndex {
 public:
  MultisetIndex() = default;
  MultisetIndex(int n, int max_size);

  std::uint64_t count(int size) const;
  /// `sorted` must be non-decreasing with entries in [0, n).
  std::uint64_t rank(std::span<const Vertex> sorted) const;
  std::vector<Vertex> unrank(int size, std::uint64_t rank) const;

 private:
  int n_ = 0;
  int max_size_ = 0;
};

/// Solved k-cop game on a fixed graph: rounds-to-capture for every position,
/// infinity where the robber escapes forever. A round is all cops moving (or
/// staying) and then the robber moving (or staying); capture is the first
/// instant a cop shares the robber's vertex.
class CopGame {
 public:
  /// Retrograde value iteration over cop multisets, robber positions kept as
  /// bit masks. Throws SizeError when the table would exceed options.max_states.
  static CopGame solve(const Graph& g, int cops, const CopOptions& options = {});

  const Graph& graph() const { return graph_; }
  int cops() const { return cops_; }
  std::uint64_t configuration_count() const { return configs_; }

  ExtendedInt value(const GamePosition& position) const;
  ExtendedInt cops_to_move(std::span<const Vertex> cops, Vertex robber) const;
  ExtendedInt robber_to_move(std::span<const Vertex> cops, Vertex robber) const;

  /// capt(G; placement): the robber then picks the worst cop-free start; 0 if
  /// the placement occupies every vertex.
  ExtendedInt capture_time(std::span<const Vertex> placement) const;
  ExtendedInt capture_time(VertexSet placement) const;

  /// Re-derives every cops-to-move value from the one-round recursion using
  /// explicit joint moves. True iff the table satisfies it everywhere.
  bool verify_fixpoint() const;

  /// For each cop-free robber start, the joint cop move realising the value.
  /// Debugging aid; the format is not stable.
  std::string strategy_dump(std::span<const Vertex> placement) const;

 private:
  std::uint64_t config_rank(std::span<const Vertex> cops) const;
  std::vector<Vertex> canonical(std::span<const Vertex> cops) const;

  Graph graph_;
  int cops_ = 0;
  std::uint64_t configs_ = 0;
  MultisetIndex index_;
  /// value_[config * n + robber]; kEscape marks infinity.
  std::vector<std::uint16_t> value_;
};

/// capt(G; S) for a cop multiset (repeated vertices allowed) or a set.
ExtendedInt capture_time(const Graph& g, std::span<const Vertex> cops, const CopOptions& options = {});
ExtendedInt capture_time(const Graph& g, VertexSet cops, const CopOptions& options = {});

struct CaptureWitness {
  ExtendedInt value = ExtendedInt::infinity();
  /// Colex-first k-subset realising the value (empty when infinite).
  VertexSet placement;
};

/// capt_k(G): minimum over k-subsets (distinct vertices) of capt(G; S).
CaptureWitness capt_k(const Graph& g, int k, const CopOptions& options = {});

/// c(G): least k with capt_k(G) finite.
int cop_number(const Graph& g, const CopOptions& options = {});

struct CopThrottling {
  int cop_number = 0;
  /// th_c^x(G) = min over k >= c(G) of k (1 + capt_k(G)).
  int th_times = 0;
  VertexSet th_times_witness;
  int th_times_capture = 0;
  /// th_c^*(G) = min over c(G) <= k < n of k capt_k(G); absent when c(G) = n.
  std::optional<int> th_star;
  VertexSet th_star_witness;
};

CopThrottling th_times_cops(const Graph& g, const CopOptions& options = {});

}  // namespace psdthrottle
