#include "psdthrottle/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/metrics.hpp"
#include "psdthrottle/operations.hpp"
#include "psdthrottle/psd.hpp"

namespace psdthrottle {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::array<std::string_view, 9> kRowNames = {
    "complete", "cycle",          "complete_bipartite", "tree",           "path",
    "hypercube", "complete_multipartite", "cycle_complement", "path_complement",
};

void require(bool ok, TableRow row, const char* constraint) {
  if (!ok) throw ParameterError(std::string(to_string(row)) + " row requires " + constraint);
}

FamilyRecord record(TableRow row, std::span<const int> params, std::optional<int> z, std::optional<int> pt,
                    std::optional<int> times, std::optional<int> star) {
  return {row, std::vector<int>(params.begin(), params.end()), z, pt, times, star};
}

std::int64_t saturate(const cpp_int& v) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  return v > kMax ? kMax : v.convert_to<std::int64_t>();
}

BoundEntry entry(std::string name, std::int64_t lhs, Relation rel, std::int64_t rhs, std::string note = {}) {
  BoundEntry e{std::move(name), lhs, rel, rhs, true, true, std::move(note)};
  switch (rel) {
    case Relation::le: e.holds = lhs <= rhs; break;
    case Relation::ge: e.holds = lhs >= rhs; break;
    case Relation::eq: e.holds = lhs == rhs; break;
  }
  return e;
}

BoundEntry not_applicable(std::string name, Relation rel, std::string why) {
  BoundEntry e;
  e.name = std::move(name);
  e.relation = rel;
  e.applicable = false;
  e.note = std::move(why);
  return e;
}

std::int64_t finite(const ExtendedInt& v, const char* what) {
  if (v.is_infinite()) throw PreconditionError(std::string("searched record: ") + what + " is infinite");
  return v.value();
}

void check_witness(const Graph& g, const ThrottlingWitness& w, Parameter expected, const char* what) {
  if (w.parameter != expected) throw PreconditionError(std::string("searched record: ") + what + " has the wrong parameter tag");
  if (!w.witness.is_subset_of(g.vertices())) throw PreconditionError(std::string("searched record: ") + what + " witness out of range");
  if (prop_time(g, w.witness) != w.witness_pt) {
    throw PreconditionError(std::string("searched record: ") + what + " witness pt does not match the graph");
  }
}

// n <= |S| (1 + 2p) when max degree is 2, (D - 2) n <= |S| (D (D-1)^p - 2) above.
BoundEntry delta_propagation(const Graph& g, const std::string& label, VertexSet s, int p) {
  const int n = g.order();
  const int d = g.max_degree();
  const std::string name = "delta_propagation[" + label + "]";
  if (d < 2) return not_applicable(name, Relation::le, "max degree below 2");
  const std::int64_t size = s.size();
  if (d == 2) return entry(name, n, Relation::le, size * (1 + 2 * std::int64_t{p}), "max degree 2 branch");
  const cpp_int scaled = cpp_int(size) * (cpp_int(d) * boost::multiprecision::pow(cpp_int(d - 1), p) - 2);
  BoundEntry e = entry(name, n, Relation::le, saturate(scaled / (d - 2)), "max degree > 2 branch, rhs floored");
  e.holds = cpp_int(d - 2) * n <= scaled;
  return e;
}

void forest_entries(BoundReport& report, const Graph& g, int rad, const std::string& label, VertexSet s) {
  const PropagationTrace trace = propagate(g, s);
  const ForcingForest forest = forcing_forest(trace, g);
  const std::int64_t k = s.size();
  const std::int64_t max_rad = forest.max_radius();
  report.entries.push_back(entry("forest_lemma[" + label + "]", k - 1 + k * max_rad, Relation::ge, rad));
  report.entries.push_back(
      entry("forest_radius_pt[" + label + "]", trace.propagation_time().value(), Relation::ge, max_rad));
}

template <class F>
void guarded(BoundReport& report, const std::string& name, Relation rel, F&& f) {
  try {
    f();
  } catch (const SizeError& e) {
    report.entries.push_back(not_applicable(name, rel, std::string("size error: ") + e.what()));
  }
}

}  // namespace

int pt_cycle(int n, int k) {
  if (n < 3 || k < 1 || k > n) throw ParameterError("pt_cycle needs n >= 3 and 1 <= k <= n");
  return static_cast<int>(ceil_div(n - k, 2 * k));
}

int th_times_cycle(int n) {
  if (n < 4) throw ParameterError("th_times_cycle needs n >= 4 (C_3 is K_3)");
  if (n % 12 == 3 && n >= 15) return static_cast<int>(3 * (1 + ceil_div(n - 3, 6)));
  return static_cast<int>(2 * (1 + ceil_div(n - 2, 4)));
}

std::string_view to_string(Lemma2Branch b) { return b == Lemma2Branch::strict_less ? "strict_less" : "at_least"; }

CycleLemmaCheck cycle_floor_lemmas(std::int64_t n, std::int64_t k) {
  CycleLemmaCheck c;
  c.n = n;
  c.k = k;
  c.lemma1_applicable = k >= 4 && n >= 1;
  if (k >= 1) {
    c.lemma1_lhs = k * (1 + ceil_div(n - k, 2 * k));
    c.lemma1_rhs = 2 + 2 * ceil_div(n - 2, 4);
    c.lemma1_holds = c.lemma1_lhs >= c.lemma1_rhs;
  }
  c.lemma2_lhs = 3 * (1 + ceil_div(n - 3, 6));
  c.lemma2_rhs = 2 + 2 * ceil_div(n - 2, 4);
  c.lemma2_branch = c.lemma2_lhs < c.lemma2_rhs ? Lemma2Branch::strict_less : Lemma2Branch::at_least;
  const bool residue = ((n % 12) + 12) % 12 == 3;
  c.lemma2_matches_residue = (c.lemma2_branch == Lemma2Branch::strict_less) == residue;
  return c;
}

std::string_view to_string(TableRow row) { return kRowNames[static_cast<std::size_t>(row)]; }

TableRow parse_table_row(std::string_view name) {
  for (std::size_t i = 0; i < kRowNames.size(); ++i) {
    if (kRowNames[i] == name) return static_cast<TableRow>(i);
  }
  throw ParameterError("unknown table row '" + std::string(name) + "'");
}

Graph family_graph(TableRow row, std::span<const int> params) {
  auto arity = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParameterError(std::string(to_string(row)) + " row takes " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (row) {
    case TableRow::complete: arity(1); return complete(params[0]);
    case TableRow::cycle: arity(1); return cycle(params[0]);
    case TableRow::complete_bipartite: arity(2); return complete_bipartite(params[0], params[1]);
    case TableRow::tree:
      arity(2);
      if (params[1] < 0) throw ParameterError("tree row seed must be non-negative");
      return random_tree(params[0], static_cast<std::uint64_t>(params[1]));
    case TableRow::path: arity(1); return path(params[0]);
    case TableRow::hypercube: arity(1); return hypercube(params[0]);
    case TableRow::complete_multipartite: return complete_multipartite(params);
    case TableRow::cycle_complement: arity(1); return complement(cycle(params[0]));
    case TableRow::path_complement: arity(1); return complement(path(params[0]));
  }
  throw ParameterError("unknown table row");
}

FamilyRecord family_values_tree(const Graph& g) {
  if (!is_tree(g)) throw ParameterError("tree row requires a tree");
  const int rad = radius(g);
  return record(TableRow::tree, std::array<int, 1>{g.order()}, 1, rad, 1 + rad, std::nullopt);
}

FamilyRecord family_values(TableRow row, std::span<const int> params) {
  auto arity = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParameterError(std::string(to_string(row)) + " row takes " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (row) {
    case TableRow::complete: {
      arity(1);
      const int n = params[0];
      require(n >= 2, row, "n >= 2");
      return record(row, params, n - 1, 1, n, n - 1);
    }
    case TableRow::cycle: {
      arity(1);
      const int n = params[0];
      require(n >= 3, row, "n >= 3");
      if (n == 3) return family_values(TableRow::complete, params);
      return record(row, params, 2, pt_cycle(n, 2), th_times_cycle(n), static_cast<int>(ceil_div(n, 3)));
    }
    case TableRow::complete_bipartite: {
      arity(2);
      require(params[0] >= 1 && params[1] >= 1, row, "s, t >= 1");
      const int m = std::min(params[0], params[1]);
      return record(row, params, m, 1, 2 * m, m);
    }
    case TableRow::tree: {
      arity(2);
      require(params[0] >= 1, row, "n >= 1");
      FamilyRecord r = family_values_tree(family_graph(row, params));
      r.params.assign(params.begin(), params.end());
      return r;
    }
    case TableRow::path: {
      arity(1);
      const int n = params[0];
      require(n >= 2, row, "n >= 2");
      const int pt = static_cast<int>(ceil_div(n - 1, 2));
      return record(row, params, 1, pt, 1 + pt, static_cast<int>(ceil_div(n, 3)));
    }
    case TableRow::hypercube: {
      arity(1);
      const int d = params[0];
      require(d >= 1 && d <= 6, row, "1 <= d <= 6");
      return record(row, params, 1 << (d - 1), 1, 1 << d, 1 << (d - 1));
    }
    case TableRow::complete_multipartite: {
      require(params.size() >= 2, row, "at least two parts");
      require(std::all_of(params.begin(), params.end(), [](int p) { return p >= 1; }), row, "parts >= 1");
      int n = 0;
      for (int p : params) n += p;
      const int z = n - *std::max_element(params.begin(), params.end());
      return record(row, params, z, 1, std::min(n, 2 * z), z);
    }
    case TableRow::cycle_complement: {
      arity(1);
      const int n = params[0];
      require(n >= 5, row, "n >= 5");
      return record(row, params, n - 3, n == 6 ? 1 : 2, n, n == 6 ? n - 3 : n - 2);
    }
    case TableRow::path_complement: {
      arity(1);
      const int n = params[0];
      require(n >= 5, row, "n >= 5");
      return record(row, params, n - 3, 2, n, n - 2);
    }
  }
  throw ParameterError("unknown table row");
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "=";
  }
  return "?";
}

std::vector<const BoundEntry*> BoundReport::violations() const {
  std::vector<const BoundEntry*> out;
  for (const BoundEntry& e : entries) {
    if (e.applicable && !e.holds) out.push_back(&e);
  }
  return out;
}

std::int64_t log_bound_rhs(int n, int max_degree, int z) {
  if (max_degree < 3 || z < 1 || n < z) throw ParameterError("log bound needs max degree >= 3 and 1 <= Z <= n");
  const cpp_int a = cpp_int(max_degree - 2) * n + 2 * z;
  const cpp_int b = cpp_int(max_degree) * z;
  const cpp_int a_pow = boost::multiprecision::pow(a, z);
  const cpp_int b_pow = boost::multiprecision::pow(b, z);
  const cpp_int base = max_degree - 1;
  // c >= Z (1 + log_base(a / b))  <=>  base^(c - Z) b^Z >= a^Z.
  for (std::int64_t c = 0;; ++c) {
    const bool ok = c >= z ? boost::multiprecision::pow(base, static_cast<unsigned>(c - z)) * b_pow >= a_pow
                           : b_pow >= boost::multiprecision::pow(base, static_cast<unsigned>(z - c)) * a_pow;
    if (ok) return c;
  }
}

BoundReport bound_report(const Graph& g, const ThrottlingSummary& searched, const BoundOptions& options,
                         std::string graph_id) {
  const int n = g.order();
  if (n == 0) throw ParameterError("bound report needs a non-empty graph");
  check_witness(g, searched.z_plus, Parameter::z_plus, "z_plus");
  check_witness(g, searched.pt_plus, Parameter::pt_k, "pt_plus");
  check_witness(g, searched.th_times, Parameter::th_times, "th_times");
  const int z = static_cast<int>(finite(searched.z_plus.value, "z_plus"));
  const int pt = static_cast<int>(finite(searched.pt_plus.value, "pt_plus"));
  const std::int64_t thx = finite(searched.th_times.value, "th_times");
  const VertexSet sx = searched.th_times.witness;
  const int sx_pt = static_cast<int>(finite(searched.th_times.witness_pt, "th_times witness pt"));
  if (searched.z_plus.witness.size() != z || searched.pt_plus.witness.size() != z || searched.pt_plus.witness_pt != pt ||
      thx != std::int64_t{sx.size()} * (1 + sx_pt)) {
    throw PreconditionError("searched record is internally inconsistent");
  }
  if (!searched.th_star && n >= 2 && z < n) throw PreconditionError("searched record is missing th_star");
  std::optional<std::int64_t> ths;
  if (searched.th_star) {
    check_witness(g, *searched.th_star, Parameter::th_star, "th_star");
    ths = finite(searched.th_star->value, "th_star");
    if (*ths != std::int64_t{searched.th_star->witness.size()} * finite(searched.th_star->witness_pt, "th_star pt") ||
        searched.th_star->witness.size() >= n) {
      throw PreconditionError("searched th_star witness is inconsistent");
    }
  }

  BoundReport report;
  report.graph_id = std::move(graph_id);
  auto& out = report.entries;
  const MetricTable metric(g);
  const bool connected = metric.connected();
  const int d = g.max_degree();

  if (2 * z >= n) {
    out.push_back(entry("extreme_observation", thx, Relation::eq, n, "2 Z_+ >= n"));
  } else {
    out.push_back(not_applicable("extreme_observation", Relation::eq, "2 Z_+ < n"));
  }

  if (pt == 1) {
    out.push_back(entry("pt_one_times", thx, Relation::eq, std::min(n, 2 * z), "pt_+ = 1"));
    if (ths) out.push_back(entry("pt_one_star", *ths, Relation::eq, z, "pt_+ = 1"));
  } else {
    out.push_back(not_applicable("pt_one_times", Relation::eq, "pt_+ != 1"));
  }

  if (connected) {
    const int rad = *metric.radius();
    out.push_back(entry("radius", thx, Relation::ge, 1 + rad));
    if (is_tree(g)) out.push_back(entry("radius_tree_equality", thx, Relation::eq, 1 + rad, "tree"));
    forest_entries(report, g, rad, "times", sx);
    if (searched.th_star) forest_entries(report, g, rad, "star", searched.th_star->witness);
  } else {
    out.push_back(not_applicable("radius", Relation::ge, "disconnected"));
    out.push_back(not_applicable("forest_lemma", Relation::ge, "disconnected"));
  }

  if (connected && n >= 2) {
    guarded(report, "alpha", Relation::le, [&] {
      const int alpha = independence_number(g, std::max(32, n));
      out.push_back(entry("alpha", thx, Relation::le, 2 * std::int64_t{n - alpha}, "alpha = " + std::to_string(alpha)));
    });
  } else {
    out.push_back(not_applicable("alpha", Relation::le, connected ? "n = 1" : "disconnected"));
  }

  out.push_back(delta_propagation(g, "zero_forcing", searched.z_plus.witness,
                                  static_cast<int>(searched.z_plus.witness_pt.value())));
  out.push_back(delta_propagation(g, "times", sx, sx_pt));
  if (searched.th_star) {
    out.push_back(delta_propagation(g, "star", searched.th_star->witness,
                                    static_cast<int>(searched.th_star->witness_pt.value())));
  }

  if (d == 2) {
    out.push_back(entry("delta2", thx, Relation::ge, ceil_div(z + n, 2)));
  } else {
    out.push_back(not_applicable("delta2", Relation::ge, "max degree " + std::to_string(d)));
  }
  if (d >= 3) {
    out.push_back(entry("delta3_log", thx, Relation::ge, log_bound_rhs(n, d, z)));
  } else {
    out.push_back(not_applicable("delta3_log", Relation::ge, "max degree " + std::to_string(d)));
  }

  if (connected) {
    guarded(report, "k_radius", Relation::ge, [&] {
      std::vector<int> rad_k(n + 1, 0);
      for (int k = z; k <= n; ++k) rad_k[k] = k_radius(g, k);
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int k = z; k <= n; ++k) best = std::min(best, std::int64_t{k} * (1 + rad_k[k]));
      out.push_back(entry("k_radius_throttling", thx, Relation::ge, best));
      out.push_back(entry("k_radius[times]", sx_pt, Relation::ge, rad_k[sx.size()]));
      if (searched.th_star) {
        out.push_back(entry("k_radius[star]", searched.th_star->witness_pt.value(), Relation::ge,
                            rad_k[searched.th_star->witness.size()]));
      }
      if (options.pt_profile) {
        for (int k = z; k <= n; ++k) {
          const ExtendedInt p = pt_k(g, k, options.search).value;
          out.push_back(entry("k_radius[k=" + std::to_string(k) + "]", finite(p, "pt_k"), Relation::ge, rad_k[k]));
        }
      }
    });
  } else {
    out.push_back(not_applicable("k_radius", Relation::ge, "disconnected"));
  }
  return report;
}

BoundReport operation_bound_checks(const Graph& g, const Edge& e, const BoundOptions& options, std::string graph_id) {
  if (!g.has_edge(e)) throw EdgeError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
  BoundReport report;
  report.graph_id = std::move(graph_id);
  const Graph sub = subdivide_edge(g, e);
  const Graph del = delete_edge(g, e);
  const int n = g.order();

  guarded(report, "subdivision_lemma", Relation::le, [&] {
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    std::int64_t checked = 0;
    bool lost_forcing = false;
    auto check = [&](VertexSet s) {
      const ExtendedInt before = prop_time(g, s);
      if (before.is_infinite()) return;
      const ExtendedInt after = prop_time(sub, s);
      ++checked;
      if (after.is_infinite()) {
        lost_forcing = true;
        return;
      }
      worst = std::max<std::int64_t>(worst, after.value() - before.value());
    };
    if (n <= options.exhaustive_limit) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) check(VertexSet(bits));
    } else {
      check(th_times(g, options.search).witness);
    }
    BoundEntry ent = entry("subdivision_lemma", worst, Relation::le, 1,
                           "max pt(G_e;S) - pt(G;S) over " + std::to_string(checked) + " forcing sets");
    if (lost_forcing) {
      ent.holds = false;
      ent.note += "; some forcing set of G does not force G_e";
    }
    report.entries.push_back(ent);
  });

  guarded(report, "subdivision", Relation::le, [&] {
    const ThrottlingWitness w = th_times(g, options.search);
    const std::int64_t thx = w.value.value();
    const std::int64_t s = w.witness.size();
    const std::int64_t p = w.witness_pt.value();
    const std::int64_t sub_thx = th_times(sub, options.search).value.value();
    report.entries.push_back(entry("subdivision", sub_thx, Relation::le, std::min(thx + s, thx + p + 1)));
    const std::int64_t del_thx = th_times(del, options.search).value.value();
    report.entries.push_back(entry("deletion", del_thx, Relation::le, thx + 1 + p));
  });
  return report;
}

BoundReport product_bound_checks(const Graph& g, const Graph& h, const BoundOptions& options, std::string graph_id) {
  BoundReport report;
  report.graph_id = std::move(graph_id);
  const Graph prod = cartesian_product(g, h);

  for (const Factor which : {Factor::left, Factor::right}) {
    const Graph& factor = which == Factor::left ? g : h;
    const std::string name = which == Factor::left ? "projection_left" : "projection_right";
    guarded(report, name, Relation::le, [&] {
      std::int64_t worst = std::numeric_limits<std::int64_t>::min();
      std::int64_t checked = 0;
      bool lost_forcing = false;
      auto check = [&](VertexSet s) {
        const ExtendedInt p = prop_time(prod, s);
        if (p.is_infinite()) return;
        ++checked;
        const ExtendedInt q = prop_time(factor, project_to_factor(prod, s, which));
        if (q.is_infinite()) {
          lost_forcing = true;
          return;
        }
        worst = std::max<std::int64_t>(worst, q.value() - p.value());
      };
      if (prod.order() <= options.exhaustive_limit) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << prod.order()); ++bits) check(VertexSet(bits));
      } else {
        check(th_times(prod, options.search).witness);
      }
      BoundEntry ent = entry(name, worst, Relation::le, 0,
                             "max pt(factor;S_factor) - pt(product;S) over " + std::to_string(checked) + " forcing sets");
      if (lost_forcing) {
        ent.holds = false;
        ent.note += "; some projection is not forcing";
      }
      report.entries.push_back(ent);
    });
  }

  guarded(report, "product_bounds", Relation::ge, [&] {
    const std::int64_t tp = th_times(prod, options.search).value.value();
    const std::int64_t tg = th_times(g, options.search).value.value();
    const std::int64_t th = th_times(h, options.search).value.value();
    report.entries.push_back(entry("product_lower_left", tp, Relation::ge, tg));
    report.entries.push_back(entry("product_lower_right", tp, Relation::ge, th));
    report.entries.push_back(entry("product_upper_left", tp, Relation::le, tg * h.order()));
    report.entries.push_back(entry("product_upper_right", tp, Relation::le, th * g.order()));
  });
  return report;
}

}  // namespace psdthrottle
