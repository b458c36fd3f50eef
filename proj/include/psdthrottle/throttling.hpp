#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psdthrottle/extended_int.hpp"
#include "psdthrottle/graph.hpp"

namespace psdthrottle {

enum class Parameter { z_plus, pt_k, th_sum, th_times, th_star };

std::string_view to_string(Parameter p);
/// Throws ParameterError for unknown names.
Parameter parse_parameter(std::string_view name);

struct SearchOptions {
  /// Graphs above this order are rejected with SizeError.
  int max_vertices = 24;
  /// Upper bound on C(n, k) for a single cardinality.
  std::uint64_t max_subsets = std::uint64_t{1} << 30;
  /// Threads splitting each k-subset walk. Results do not depend on this.
  int workers = 1;
  /// Diagnostic messages (never data); may be empty.
  std::function<void(const std::string&)> progress;
};

/// Optimal value of a throttling parameter together with a set realising it.
struct ThrottlingWitness {
  Parameter parameter = Parameter::z_plus;
  ExtendedInt value;
  VertexSet witness;
  ExtendedInt witness_pt = ExtendedInt::infinity();
  int k_min = 0;
  int k_max = 0;
};

/// Z_+(G): smallest k admitting a PSD forcing set; witness is the colex-first one.
ThrottlingWitness z_plus(const Graph& g, const SearchOptions& options = {});

/// pt_+(G, k): minimum propagation time over k-subsets; infinity iff k < Z_+(G).
ThrottlingWitness pt_k(const Graph& g, int k, const SearchOptions& options = {});

/// th_+^x(G) = min over k >= Z_+(G) of k (1 + pt_+(G, k)).
ThrottlingWitness th_times(const Graph& g, const SearchOptions& options = {});

/// th_+^*(G) = min over Z_+(G) <= k < n of k pt_+(G, k). Throws
/// UndefinedParameterError when no such k exists (n = 1, or Z_+(G) = n).
ThrottlingWitness th_star(const Graph& g, const SearchOptions& options = {});

/// th_+(G) = min over k >= Z_+(G) of k + pt_+(G, k).
ThrottlingWitness th_sum(const Graph& g, const SearchOptions& options = {});

/// Everything the bound suite consumes, from the pruned searches.
struct ThrottlingSummary {
  ThrottlingWitness z_plus;
  /// pt_+(G) = pt_+(G, Z_+(G)).
  ThrottlingWitness pt_plus;
  ThrottlingWitness th_sum;
  ThrottlingWitness th_times;
  /// Absent when th_+^* is undefined.
  std::optional<ThrottlingWitness> th_star;
};

ThrottlingSummary summarize(const Graph& g, const SearchOptions& options = {});

/// Unpruned ground truth from all 2^n subsets and a separate rule simulation.
struct OracleRecord {
  int z_plus = 0;
  ExtendedInt pt_plus;
  /// pt_by_k[k] for 0 <= k <= n.
  std::vector<ExtendedInt> pt_by_k;
  int th_sum = 0;
  int th_times = 0;
  std::optional<int> th_star;
};

/// Throws SizeError for n > 12 and ParameterError for n = 0.
OracleRecord oracle_all(const Graph& g);

struct RelationCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

struct WitnessRelations {
  bool skipped = false;
  std::string reason;
  std::vector<RelationCheck> checks;

  bool all_hold() const;
};

/// Checks the four relations between optimal S^x and S^* witnesses. Skipped
/// (not failed) when th_+^x(G) = n or G is disconnected.
WitnessRelations witness_relations(const Graph& g, const SearchOptions& options = {});

}  // namespace psdthrottle
