#pragma once

#include <string>
#include <vector>

#include "psdthrottle/extended_int.hpp"
#include "psdthrottle/graph.hpp"

namespace psdthrottle {

/// u -> v: blue u forces white v.
struct ForcePair {
  Vertex forcer = 0;
  Vertex forced = 0;

  auto operator<=>(const ForcePair&) const = default;
};

struct Force {
  Vertex forcer = 0;
  Vertex forced = 0;
  int round = 0;

  bool operator==(const Force&) const = default;
};

enum class PropagationStatus { forced_all, stalled };

/// Round-by-round record of the PSD process started from `initial`.
struct PropagationTrace {
  VertexSet initial;
  /// rounds[i - 1] is the set newly coloured in round i; every entry is non-empty.
  std::vector<VertexSet> rounds;
  /// cumulative[i] is the blue set after round i; cumulative[0] == initial.
  std::vector<VertexSet> cumulative;
  /// Round in which each vertex turned blue, -1 if it never did.
  std::vector<int> round_of;
  /// One force per vertex outside `initial` that turned blue, in round order.
  std::vector<Force> forces;
  PropagationStatus status = PropagationStatus::stalled;

  int rounds_run() const { return static_cast<int>(rounds.size()); }
  VertexSet derived_set() const { return cumulative.back(); }
  /// Number of rounds when forced_all, else infinity.
  ExtendedInt propagation_time() const;
};

/// Every force the PSD colour change rule enables against the current blue set:
/// for each component W of G - blue and each blue u with exactly one
/// neighbour w in W, the pair (u, w). Sorted by (forcer, forced). Empty iff stalled.
std::vector<ForcePair> psd_round(const Graph& g, VertexSet blue);

/// Vertices psd_round would colour this round, without the force attribution.
VertexSet psd_forced_set(const Graph& g, VertexSet blue);

/// Iterates psd_round until everything is blue or nothing changes. When several
/// blue vertices can force w in one round the lowest-index forcer is recorded.
PropagationTrace propagate(const Graph& g, VertexSet initial);

/// pt_+(G; S): rounds until S^[p] = V(G), infinity if S is not a PSD forcing set.
ExtendedInt prop_time(const Graph& g, VertexSet initial);

/// As prop_time, but gives up (returning infinity) once more than `cap` rounds
/// would be needed. Exact whenever the true value is <= cap.
ExtendedInt prop_time_capped(const Graph& g, VertexSet initial, int cap);

inline bool is_psd_forcing_set(const Graph& g, VertexSet s) { return prop_time(g, s).is_finite(); }

struct ForcingTree {
  Vertex root = 0;
  VertexSet vertices;
  std::vector<Edge> edges;
  /// Radius of the tree as a graph in its own right.
  int radius = 0;
};

/// PSD forcing tree cover: one tree per initial vertex, edges = used forces.
struct ForcingForest {
  std::vector<ForcingTree> trees;

  int max_radius() const;
  std::vector<Edge> edges() const;
};

/// Throws PreconditionError unless trace.status == forced_all.
ForcingForest forcing_forest(const PropagationTrace& trace, const Graph& g);

/// One line per round, "round i: u->v u->v ...", then a status line.
std::string format_trace(const PropagationTrace& trace, bool one_indexed = false);

}  // namespace psdthrottle
