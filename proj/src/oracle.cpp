// Brute-force ground truth for the throttling searches. Deliberately shares no
// code with the PSD engine: adjacency lists, explicit component labels and a
// full walk over every subset.

#include <algorithm>
#include <vector>

#include "psdthrottle/error.hpp"
#include "psdthrottle/throttling.hpp"

namespace psdthrottle {

namespace {

constexpr int kOracleLimit = 12;

int naive_propagation_time(const std::vector<std::vector<int>>& adj, unsigned mask) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> blue(n);
  for (int v = 0; v < n; ++v) blue[v] = (mask >> v) & 1U;
  for (int rounds = 0;; ++rounds) {
    if (std::all_of(blue.begin(), blue.end(), [](bool b) { return b; })) return rounds;

    std::vector<int> label(n, -1);
    int labels = 0;
    for (int s = 0; s < n; ++s) {
      if (blue[s] || label[s] >= 0) continue;
      std::vector<int> stack{s};
      label[s] = labels;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (!blue[w] && label[w] < 0) {
            label[w] = labels;
            stack.push_back(w);
          }
        }
      }
      ++labels;
    }

    std::vector<bool> turn(n, false);
    bool any = false;
    for (int u = 0; u < n; ++u) {
      if (!blue[u]) continue;
      std::vector<int> count(labels, 0);
      std::vector<int> last(labels, -1);
      for (int w : adj[u]) {
        if (blue[w]) continue;
        ++count[label[w]];
        last[label[w]] = w;
      }
      for (int c = 0; c < labels; ++c) {
        if (count[c] == 1) {
          turn[last[c]] = true;
          any = true;
        }
      }
    }
    if (!any) return -1;
    for (int v = 0; v < n; ++v) {
      if (turn[v]) blue[v] = true;
    }
  }
}

}  // namespace

OracleRecord oracle_all(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw ParameterError("oracle_all needs at least one vertex");
  if (n > kOracleLimit) throw SizeError("oracle_all enumerates 2^n subsets and is limited to n <= 12");

  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) adj[u].push_back(v);
    }
  }

  OracleRecord rec;
  rec.pt_by_k.assign(n + 1, ExtendedInt::infinity());
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int pt = naive_propagation_time(adj, mask);
    if (pt < 0) continue;
    const int k = __builtin_popcount(mask);
    rec.pt_by_k[k] = std::min(rec.pt_by_k[k], ExtendedInt(pt));
  }

  rec.z_plus = n;
  for (int k = n; k >= 0; --k) {
    if (rec.pt_by_k[k].is_finite()) rec.z_plus = k;
  }
  rec.pt_plus = rec.pt_by_k[rec.z_plus];
  rec.th_sum = rec.th_times = n + 1 + n * n;
  for (int k = rec.z_plus; k <= n; ++k) {
    if (rec.pt_by_k[k].is_infinite()) continue;
    const int pt = rec.pt_by_k[k].value();
    rec.th_sum = std::min(rec.th_sum, k + pt);
    rec.th_times = std::min(rec.th_times, k * (1 + pt));
    if (k < n) rec.th_star = std::min(rec.th_star.value_or(k * pt), k * pt);
  }
  return rec;
}

}  // namespace psdthrottle
