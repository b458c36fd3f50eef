#pragma once

#include <cstdint>

#include "psdthrottle/vertex_set.hpp"

namespace psdthrottle {

/// C(n, k) saturating at UINT64_MAX; 0 outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

/// The rank-th k-subset of {0, 1, ...} in colex order (combinatorial number system).
inline VertexSet colex_unrank(int k, std::uint64_t rank) {
  VertexSet s;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    s.insert(c);
  }
  return s;
}

/// Successor of s among subsets of equal size in colex order (Gosper's hack).
/// Returns false once the successor would leave {0, ..., n-1}.
inline bool next_k_subset(std::uint64_t& s, int n) {
  const std::uint64_t c = s & (~s + 1);
  const std::uint64_t r = s + c;
  if (r == 0) return false;
  s = (((r ^ s) >> 2) / c) | r;
  return n >= 64 || (s >> n) == 0;
}

/// Calls f on up to `count` k-subsets of {0..n-1} starting at colex rank `first`.
/// f returns false to stop early. Returns false iff f stopped the walk.
template <class F>
bool for_each_k_subset_range(int n, int k, std::uint64_t first, std::uint64_t count, F&& f) {
  if (k < 0 || k > n || count == 0) return true;
  if (k == 0) return first == 0 ? static_cast<bool>(f(VertexSet{})) : true;
  std::uint64_t s = colex_unrank(k, first).bits();
  if (n < 64 && (s >> n) != 0) return true;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!f(VertexSet(s))) return false;
    if (!next_k_subset(s, n)) break;
  }
  return true;
}

/// Calls f on every k-subset of {0..n-1} in colex order until f returns false.
template <class F>
bool for_each_k_subset(int n, int k, F&& f) {
  return for_each_k_subset_range(n, k, 0, binomial(n, k), static_cast<F&&>(f));
}

}  // namespace psdthrottle
