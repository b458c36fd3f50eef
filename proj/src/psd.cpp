#include "psdthrottle/psd.hpp"

#include <algorithm>

#include "psdthrottle/error.hpp"
#include "psdthrottle/metrics.hpp"
#include "psdthrottle/operations.hpp"

namespace psdthrottle {

namespace {

// Calls f(component) for every connected component of G[white].
template <class F>
void for_each_white_component(const Graph& g, VertexSet white, F&& f) {
  while (!white.empty()) {
    VertexSet comp = VertexSet::single(white.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = (g.neighborhood(frontier) & white) - comp;
      comp |= frontier;
    }
    f(comp);
    white -= comp;
  }
}

}  // namespace

ExtendedInt PropagationTrace::propagation_time() const {
  return status == PropagationStatus::forced_all ? ExtendedInt(rounds_run()) : ExtendedInt::infinity();
}

std::vector<ForcePair> psd_round(const Graph& g, VertexSet blue) {
  if (!g.contains(blue)) throw ParameterError("blue set leaves the vertex range");
  std::vector<ForcePair> out;
  for_each_white_component(g, g.vertices() - blue, [&](VertexSet comp) {
    for (Vertex u : g.neighborhood(comp) & blue) {
      const VertexSet white_nbrs = g.neighbors(u) & comp;
      if (white_nbrs.size() == 1) out.push_back({u, white_nbrs.lowest()});
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet psd_forced_set(const Graph& g, VertexSet blue) {
  VertexSet forced;
  for_each_white_component(g, g.vertices() - blue, [&](VertexSet comp) {
    for (Vertex u : g.neighborhood(comp) & blue) {
      const VertexSet white_nbrs = g.neighbors(u) & comp;
      if (white_nbrs.size() == 1) forced |= white_nbrs;
    }
  });
  return forced;
}

PropagationTrace propagate(const Graph& g, VertexSet initial) {
  if (!g.contains(initial)) throw ParameterError("initial set leaves the vertex range");
  PropagationTrace trace;
  trace.initial = initial;
  trace.cumulative.push_back(initial);
  trace.round_of.assign(g.order(), -1);
  for (Vertex v : initial) trace.round_of[v] = 0;

  VertexSet blue = initial;
  while (blue != g.vertices()) {
    const std::vector<ForcePair> enabled = psd_round(g, blue);
    if (enabled.empty()) break;
    const int round = trace.rounds_run() + 1;
    VertexSet newly;
    // Sorted by forcer, so the first pair naming w has the lowest-index forcer.
    for (const ForcePair& f : enabled) {
      if (newly.contains(f.forced)) continue;
      newly.insert(f.forced);
      trace.forces.push_back({f.forcer, f.forced, round});
      trace.round_of[f.forced] = round;
    }
    std::stable_sort(trace.forces.end() - newly.size(), trace.forces.end(),
                     [](const Force& a, const Force& b) { return a.forced < b.forced; });
    blue |= newly;
    trace.rounds.push_back(newly);
    trace.cumulative.push_back(blue);
  }
  trace.status = blue == g.vertices() ? PropagationStatus::forced_all : PropagationStatus::stalled;
  return trace;
}

ExtendedInt prop_time_capped(const Graph& g, VertexSet initial, int cap) {
  if (!g.contains(initial)) throw ParameterError("initial set leaves the vertex range");
  const VertexSet all = g.vertices();
  VertexSet blue = initial;
  int rounds = 0;
  while (blue != all) {
    if (rounds == cap) return ExtendedInt::infinity();
    const VertexSet forced = psd_forced_set(g, blue);
    if (forced.empty()) return ExtendedInt::infinity();
    blue |= forced;
    ++rounds;
  }
  return rounds;
}

ExtendedInt prop_time(const Graph& g, VertexSet initial) { return prop_time_capped(g, initial, g.order()); }

int ForcingForest::max_radius() const {
  int best = 0;
  for (const ForcingTree& t : trees) best = std::max(best, t.radius);
  return best;
}

std::vector<Edge> ForcingForest::edges() const {
  std::vector<Edge> out;
  for (const ForcingTree& t : trees) out.insert(out.end(), t.edges.begin(), t.edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

ForcingForest forcing_forest(const PropagationTrace& trace, const Graph& g) {
  if (trace.status != PropagationStatus::forced_all) {
    throw PreconditionError("forcing_forest needs a trace that forces every vertex");
  }
  std::vector<Vertex> root_of(g.order(), -1);
  for (Vertex v : trace.initial) root_of[v] = v;
  // Forces are in round order, so each forcer's root is already known.
  for (const Force& f : trace.forces) root_of[f.forced] = root_of[f.forcer];

  ForcingForest forest;
  for (Vertex r : trace.initial) {
    ForcingTree tree;
    tree.root = r;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (root_of[v] == r) tree.vertices.insert(v);
    }
    for (const Force& f : trace.forces) {
      if (root_of[f.forced] == r) tree.edges.emplace_back(f.forcer, f.forced);
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    tree.radius = radius(induced_subgraph(Graph(g.order(), tree.edges), tree.vertices));
    forest.trees.push_back(std::move(tree));
  }
  return forest;
}

std::string format_trace(const PropagationTrace& trace, bool one_indexed) {
  const int shift = one_indexed ? 1 : 0;
  std::string out;
  for (int i = 1; i <= trace.rounds_run(); ++i) {
    out += "round " + std::to_string(i) + ":";
    for (const Force& f : trace.forces) {
      if (f.round == i) out += " " + std::to_string(f.forcer + shift) + "->" + std::to_string(f.forced + shift);
    }
    out += "\n";
  }
  out += "status: ";
  out += trace.status == PropagationStatus::forced_all ? "forced_all" : "stalled";
  out += " pt=" + trace.propagation_time().to_string() + "\n";
  return out;
}

}  // namespace psdthrottle
