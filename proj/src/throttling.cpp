#include "psdthrottle/throttling.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "psdthrottle/error.hpp"
#include "psdthrottle/psd.hpp"
#include "psdthrottle/subsets.hpp"

namespace psdthrottle {

namespace {

constexpr std::array<std::pair<Parameter, std::string_view>, 5> kParameterNames{{
    {Parameter::z_plus, "z_plus"},
    {Parameter::pt_k, "pt_k"},
    {Parameter::th_sum, "th_sum"},
    {Parameter::th_times, "th_times"},
    {Parameter::th_star, "th_star"},
}};

struct Candidate {
  ExtendedInt pt = ExtendedInt::infinity();
  VertexSet set;

  bool better_than(const Candidate& o) const {
    return pt != o.pt ? pt < o.pt : colex_less(set, o.set);
  }
};

void check_size(const Graph& g, const SearchOptions& options) {
  if (g.order() == 0) throw ParameterError("throttling parameters need at least one vertex");
  if (g.order() > options.max_vertices) {
    throw SizeError("graph order " + std::to_string(g.order()) + " exceeds the search limit " +
                    std::to_string(options.max_vertices));
  }
}

// Lowest propagation time among k-subsets whose time is at most `cap`; ties
// go to the colex-first set. With first_finite, stops at the first forcing set.
Candidate best_of_k(const Graph& g, int k, int cap, bool first_finite, const SearchOptions& options) {
  const int n = g.order();
  const std::uint64_t total = binomial(n, k);
  if (total > options.max_subsets) {
    throw SizeError("C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceed the search budget");
  }
  // k < n can never finish in 0 rounds.
  const int floor = k == n ? 0 : 1;
  if (cap < floor) return {};
  auto scan = [&](std::uint64_t first, std::uint64_t count) {
    Candidate best;
    int limit = cap;
    for_each_k_subset_range(n, k, first, count, [&](VertexSet s) {
      const ExtendedInt pt = prop_time_capped(g, s, limit);
      if (pt.is_finite() && pt < best.pt) {
        best = {pt, s};
        limit = pt.value() - 1;
      }
      return !(best.pt.is_finite() && (first_finite || best.pt <= floor || limit < floor));
    });
    return best;
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1 || total < 2048) return scan(0, total);

  std::vector<Candidate> results(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t first = chunk * w;
    if (first >= total) break;
    pool.emplace_back([&, w, first] { results[w] = scan(first, std::min(chunk, total - first)); });
  }
  for (auto& t : pool) t.join();
  Candidate best;
  for (const Candidate& c : results) {
    if (c.pt.is_finite() && c.better_than(best)) best = c;
  }
  return best;
}

void report(const SearchOptions& options, const std::string& message) {
  if (options.progress) options.progress(message);
}

}  // namespace

std::string_view to_string(Parameter p) {
  for (const auto& [q, name] : kParameterNames) {
    if (q == p) return name;
  }
  return "?";
}

Parameter parse_parameter(std::string_view name) {
  for (const auto& [q, n] : kParameterNames) {
    if (n == name) return q;
  }
  throw ParameterError("unknown parameter '" + std::string(name) + "'");
}

ThrottlingWitness z_plus(const Graph& g, const SearchOptions& options) {
  check_size(g, options);
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    report(options, "z_plus: scanning k = " + std::to_string(k));
    const Candidate c = best_of_k(g, k, n, true, options);
    if (c.pt.is_finite()) {
      return {Parameter::z_plus, k, c.set, prop_time(g, c.set), 1, k};
    }
  }
  throw Error("z_plus: V(G) failed to force itself");  // unreachable for n >= 1
}

ThrottlingWitness pt_k(const Graph& g, int k, const SearchOptions& options) {
  check_size(g, options);
  if (k < 1 || k > g.order()) throw ParameterError("pt_k needs 1 <= k <= n");
  const Candidate c = best_of_k(g, k, g.order(), false, options);
  return {Parameter::pt_k, c.pt, c.set, c.pt, k, k};
}

ThrottlingWitness th_times(const Graph& g, const SearchOptions& options) {
  const int z = z_plus(g, options).value.value();
  const int n = g.order();
  ThrottlingWitness out{Parameter::th_times, ExtendedInt::infinity(), {}, ExtendedInt::infinity(), z, z};
  // For k < n the product is at least 2k.
  for (int k = z; k < n; ++k) {
    if (out.value.is_finite() && 2 * k >= out.value.value()) break;
    out.k_max = k;
    const int cap = out.value.is_finite() ? (out.value.value() - 1) / k - 1 : n;
    report(options, "th_times: scanning k = " + std::to_string(k));
    const Candidate c = best_of_k(g, k, cap, false, options);
    if (c.pt.is_finite() && k * (1 + c.pt.value()) < out.value) {
      out.value = k * (1 + c.pt.value());
      out.witness = c.set;
      out.witness_pt = c.pt;
    }
  }
  if (n < out.value) {
    out.value = n;
    out.witness = g.vertices();
    out.witness_pt = 0;
  }
  out.k_max = std::max(out.k_max, n);
  return out;
}

ThrottlingWitness th_star(const Graph& g, const SearchOptions& options) {
  check_size(g, options);
  const int n = g.order();
  if (n < 2) throw UndefinedParameterError("th_star is undefined for n = 1 (no k with Z+ <= k < n)");
  const int z = z_plus(g, options).value.value();
  if (z >= n) throw UndefinedParameterError("th_star is undefined: Z+(G) = n leaves no k < n");
  ThrottlingWitness out{Parameter::th_star, ExtendedInt::infinity(), {}, ExtendedInt::infinity(), z, z};
  // For k < n the product is at least k.
  for (int k = z; k < n; ++k) {
    if (out.value.is_finite() && k >= out.value.value()) break;
    out.k_max = k;
    const int cap = out.value.is_finite() ? (out.value.value() - 1) / k : n;
    report(options, "th_star: scanning k = " + std::to_string(k));
    const Candidate c = best_of_k(g, k, cap, false, options);
    if (c.pt.is_finite() && k * c.pt.value() < out.value) {
      out.value = k * c.pt.value();
      out.witness = c.set;
      out.witness_pt = c.pt;
    }
  }
  return out;
}

ThrottlingWitness th_sum(const Graph& g, const SearchOptions& options) {
  const int z = z_plus(g, options).value.value();
  const int n = g.order();
  ThrottlingWitness out{Parameter::th_sum, ExtendedInt::infinity(), {}, ExtendedInt::infinity(), z, z};
  for (int k = z; k < n; ++k) {
    if (out.value.is_finite() && k + 1 >= out.value.value()) break;
    out.k_max = k;
    const int cap = out.value.is_finite() ? out.value.value() - 1 - k : n;
    report(options, "th_sum: scanning k = " + std::to_string(k));
    const Candidate c = best_of_k(g, k, cap, false, options);
    if (c.pt.is_finite() && k + c.pt.value() < out.value) {
      out.value = k + c.pt.value();
      out.witness = c.set;
      out.witness_pt = c.pt;
    }
  }
  if (n < out.value) {
    out.value = n;
    out.witness = g.vertices();
    out.witness_pt = 0;
  }
  out.k_max = std::max(out.k_max, n);
  return out;
}

ThrottlingSummary summarize(const Graph& g, const SearchOptions& options) {
  ThrottlingSummary s;
  s.z_plus = z_plus(g, options);
  s.pt_plus = pt_k(g, s.z_plus.value.value(), options);
  s.pt_plus.parameter = Parameter::pt_k;
  s.th_sum = th_sum(g, options);
  s.th_times = th_times(g, options);
  try {
    s.th_star = th_star(g, options);
  } catch (const UndefinedParameterError&) {
    s.th_star.reset();
  }
  return s;
}

bool WitnessRelations::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.applicable || c.holds; });
}

WitnessRelations witness_relations(const Graph& g, const SearchOptions& options) {
  WitnessRelations out;
  const int n = g.order();
  if (!is_connected(g)) {
    out.skipped = true;
    out.reason = "graph is disconnected";
    return out;
  }
  const ThrottlingWitness times = th_times(g, options);
  if (times.value.value() >= n) {
    out.skipped = true;
    out.reason = "th_times(G) = n";
    return out;
  }
  const ThrottlingWitness star = th_star(g, options);
  const int sx = times.witness.size();
  const int ss = star.witness.size();
  const ExtendedInt ptx = prop_time(g, times.witness);
  const ExtendedInt pts = prop_time(g, star.witness);
  const ExtendedInt ptk_x = pt_k(g, sx, options).value;
  const ExtendedInt ptk_s = pt_k(g, ss, options).value;

  out.checks.push_back({"witnesses realise pt_k at their cardinality", true, ptx == ptk_x && pts == ptk_s,
                        "pt(S*)=" + pts.to_string() + " pt(G," + std::to_string(ss) + ")=" + ptk_s.to_string() +
                            " pt(Sx)=" + ptx.to_string() + " pt(G," + std::to_string(sx) + ")=" + ptk_x.to_string()});
  out.checks.push_back({"|S*| >= |Sx|", true, ss >= sx, std::to_string(ss) + " >= " + std::to_string(sx)});
  out.checks.push_back({"pt(S*) <= pt(Sx)", true, pts <= ptx, pts.to_string() + " <= " + ptx.to_string()});
  RelationCheck swap{"equal cardinalities swap optimality", ss == sx, true, "cardinalities differ"};
  if (swap.applicable) {
    swap.holds = star.value == sx * ptx.value() && times.value == ss * (1 + pts.value());
    swap.detail = "|Sx| pt(Sx) = " + std::to_string(sx * ptx.value()) + ", |S*| (1 + pt(S*)) = " +
                  std::to_string(ss * (1 + pts.value()));
  }
  out.checks.push_back(std::move(swap));
  return out;
}

}  // namespace psdthrottle
