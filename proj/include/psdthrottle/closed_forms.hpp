#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psdthrottle/graph.hpp"
#include "psdthrottle/throttling.hpp"

namespace psdthrottle {

/// Exact ceiling of a / b for b > 0 and any sign of a.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// th_+^x(C_n) for n >= 4; ParameterError below that.
int th_times_cycle(int n);

/// pt_+(C_n, k) = ceil((n - k) / (2k)) for 1 <= k <= n, n >= 3.
int pt_cycle(int n, int k);

enum class Lemma2Branch { strict_less, at_least };
std::string_view to_string(Lemma2Branch b);

struct CycleLemmaCheck {
  std::int64_t n = 0;
  std::int64_t k = 0;
  /// k (1 + ceil((n-k)/(2k))) >= 2 + 2 ceil((n-2)/4), stated for k >= 4.
  bool lemma1_applicable = false;
  std::int64_t lemma1_lhs = 0;
  std::int64_t lemma1_rhs = 0;
  bool lemma1_holds = false;
  /// 3 (1 + ceil((n-3)/6)) against 2 + 2 ceil((n-2)/4).
  std::int64_t lemma2_lhs = 0;
  std::int64_t lemma2_rhs = 0;
  Lemma2Branch lemma2_branch = Lemma2Branch::at_least;
  /// Branch is strict_less exactly when n = 3 (mod 12).
  bool lemma2_matches_residue = false;
};

CycleLemmaCheck cycle_floor_lemmas(std::int64_t n, std::int64_t k);

enum class TableRow {
  complete,
  cycle,
  complete_bipartite,
  tree,
  path,
  hypercube,
  complete_multipartite,
  cycle_complement,
  path_complement,
};

std::string_view to_string(TableRow row);
/// Throws ParameterError for unknown names.
TableRow parse_table_row(std::string_view name);

/// One row of the family table. nullopt marks a value the table leaves open.
struct FamilyRecord {
  /// Row actually used (C_3 is answered by the complete row).
  TableRow row = TableRow::complete;
  std::vector<int> params;
  std::optional<int> z_plus;
  std::optional<int> pt_plus;
  std::optional<int> th_times;
  std::optional<int> th_star;
};

// Parameters per row:
//   complete {n >= 2}, cycle {n >= 3}, complete_bipartite {s, t >= 1},
//   tree {n >= 1, seed}, path {n >= 2}, hypercube {d >= 1},
//   complete_multipartite {n_1, ..., n_k}, k >= 2, all >= 1,
//   cycle_complement {n >= 5}, path_complement {n >= 5}.
FamilyRecord family_values(TableRow row, std::span<const int> params);
/// Tree row evaluated on a given tree; ParameterError if g is not a tree.
FamilyRecord family_values_tree(const Graph& g);
/// The graph a row describes, with the generators' labelling.
Graph family_graph(TableRow row, std::span<const int> params);

enum class Relation { le, ge, eq };
std::string_view to_string(Relation r);

struct BoundEntry {
  std::string name;
  std::int64_t lhs = 0;
  Relation relation = Relation::ge;
  std::int64_t rhs = 0;
  bool holds = true;
  bool applicable = true;
  std::string note;
};

struct BoundReport {
  std::string graph_id;
  std::vector<BoundEntry> entries;

  /// Applicable entries that fail.
  std::vector<const BoundEntry*> violations() const;
  bool ok() const { return violations().empty(); }
};

struct BoundOptions {
  SearchOptions search;
  /// Also search pt_+(G, k) for every Z_+ <= k <= n for the k-radius entries.
  bool pt_profile = true;
  /// Subdivision lemma and product projection are checked on every subset up
  /// to this order, on the optimal witnesses above it.
  int exhaustive_limit = 12;
};

/// Evaluates the general bounds against searched values. Throws
/// PreconditionError when the summary is incomplete or inconsistent with g.
BoundReport bound_report(const Graph& g, const ThrottlingSummary& searched, const BoundOptions& options = {},
                         std::string graph_id = {});

/// Smallest integer c with c >= Z (1 + log_{D-1}(((D-2) n + 2Z) / (D Z))), D >= 3, Z >= 1.
std::int64_t log_bound_rhs(int n, int max_degree, int z);

/// Subdivision lemma and proposition, deletion proposition for edge e.
BoundReport operation_bound_checks(const Graph& g, const Edge& e, const BoundOptions& options = {},
                                   std::string graph_id = {});

/// Projection, lower and upper product bounds for G and H.
BoundReport product_bound_checks(const Graph& g, const Graph& h, const BoundOptions& options = {},
                                 std::string graph_id = {});

}  // namespace psdthrottle
