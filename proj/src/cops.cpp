#include "psdthrottle/cops.hpp"

#include <algorithm>
#include <limits>

#include "psdthrottle/error.hpp"
#include "psdthrottle/subsets.hpp"

namespace psdthrottle {

namespace {

constexpr std::uint16_t kEscape = std::numeric_limits<std::uint16_t>::max();

ExtendedInt decode(std::uint16_t v) { return v == kEscape ? ExtendedInt::infinity() : ExtendedInt(v); }

ExtendedInt plus_one(ExtendedInt x) { return x.is_infinite() ? x : ExtendedInt(x.value() + 1); }

VertexSet as_set(std::span<const Vertex> cops) {
  VertexSet s;
  for (Vertex c : cops) s.insert(c);
  return s;
}

// All multisets of one size, in rank order, with the tables the layered sweep needs.
struct Level {
  int size = 0;
  std::uint64_t count = 0;
  std::vector<std::uint8_t> members;  // count * size, each row sorted
  std::vector<std::uint32_t> tail;    // rank of row minus its first element
  std::vector<std::uint32_t> insert;  // count * n: rank of row plus vertex c

  const std::uint8_t* row(std::uint64_t i) const { return members.data() + i * size; }
};

// Calls f(next) for every joint move of the cops (each moves along an edge or stays).
template <class F>
void for_each_joint_move(const Graph& g, std::span<const Vertex> cops, F&& f) {
  const std::size_t k = cops.size();
  std::vector<std::vector<Vertex>> options(k);
  for (std::size_t i = 0; i < k; ++i) options[i] = g.closed_neighborhood(cops[i]).to_vector();
  std::vector<std::size_t> pick(k, 0);
  std::vector<Vertex> next(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) next[i] = options[i][pick[i]];
    f(std::span<const Vertex>(next));
    std::size_t i = 0;
    while (i < k && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == k) return;
  }
}

}  // namespace

MultisetIndex::MultisetIndex(int n, int max_size) : n_(n), max_size_(max_size) {}

std::uint64_t MultisetIndex::count(int size) const {
  if (size == 0) return 1;
  return binomial(n_ + size - 1, size);
}

std::uint64_t MultisetIndex::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(sorted[i] + static_cast<int>(i), static_cast<int>(i) + 1);
  return r;
}

std::vector<Vertex> MultisetIndex::unrank(int size, std::uint64_t rank) const {
  std::vector<Vertex> out = colex_unrank(size, rank).to_vector();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<Vertex>(i);
  return out;
}

CopGame CopGame::solve(const Graph& g, int k, const CopOptions& options) {
  const int n = g.order();
  if (n == 0) throw ParameterError("cop game needs a non-empty graph");
  if (k < 1) throw ParameterError("cop game needs at least one cop");
  if (n + k - 1 > 63) throw SizeError("cop game: n + k - 1 must stay below 64");
  const std::uint64_t table = binomial(2 * n + k - 1, k);
  if (table > options.max_states) {
    throw SizeError("cop game with " + std::to_string(k) + " cops on " + std::to_string(n) + " vertices needs " +
                    std::to_string(table) + " table entries, budget is " + std::to_string(options.max_states));
  }

  CopGame game;
  game.graph_ = g;
  game.cops_ = k;
  game.index_ = MultisetIndex(n, k);

  std::vector<Level> levels(k + 1);
  for (int m = 0; m <= k; ++m) {
    Level& level = levels[m];
    level.size = m;
    level.count = game.index_.count(m);
    level.members.reserve(level.count * m);
    if (m == 0) {
      level.count = 1;
    } else {
      for_each_k_subset(n + m - 1, m, [&](VertexSet shifted) {
        int i = 0;
        for (Vertex b : shifted) level.members.push_back(static_cast<std::uint8_t>(b - i++));
        return true;
      });
    }
  }
  std::vector<Vertex> scratch;
  for (int m = 0; m <= k; ++m) {
    Level& level = levels[m];
    if (m > 0) {
      level.tail.resize(level.count);
      for (std::uint64_t i = 0; i < level.count; ++i) {
        scratch.assign(level.row(i) + 1, level.row(i) + m);
        level.tail[i] = static_cast<std::uint32_t>(game.index_.rank(scratch));
      }
    }
    if (m < k) {
      level.insert.resize(level.count * n);
      for (std::uint64_t i = 0; i < level.count; ++i) {
        for (Vertex c = 0; c < n; ++c) {
          scratch.assign(level.row(i), level.row(i) + m);
          scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), c), c);
          level.insert[i * n + c] = static_cast<std::uint32_t>(game.index_.rank(scratch));
        }
      }
    }
  }

  const Level& full = levels[k];
  const std::uint64_t configs = full.count;
  game.configs_ = configs;
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v).bits();

  // captured[i]: robber vertices from which the cops at config i (to move) win
  // within t rounds. Starts as the occupied vertices.
  std::vector<std::uint64_t> occupied(configs);
  for (std::uint64_t i = 0; i < configs; ++i) {
    for (int j = 0; j < k; ++j) occupied[i] |= std::uint64_t{1} << full.row(i)[j];
  }
  std::vector<std::uint64_t> captured = occupied;
  game.value_.assign(configs * n, kEscape);
  for (std::uint64_t i = 0; i < configs; ++i) {
    for (Vertex r : VertexSet(occupied[i])) game.value_[i * n + r] = 0;
  }

  std::vector<std::uint64_t> next_layer;
  std::vector<std::uint64_t> layer;
  for (int t = 1;; ++t) {
    // After the cops land on config i: robber at r is caught now, or every
    // robber reply stays inside captured[i].
    next_layer.resize(configs);
    for (std::uint64_t i = 0; i < configs; ++i) {
      std::uint64_t x = occupied[i];
      for (Vertex r = 0; r < n; ++r) {
        if ((closed[r] & ~captured[i]) == 0) x |= std::uint64_t{1} << r;
      }
      next_layer[i] = x;
    }
    // Move the cops one at a time: layer j holds (moved multiset, unmoved multiset).
    for (int j = k - 1; j >= 0; --j) {
      const Level& moved = levels[j];
      const Level& unmoved = levels[k - j];
      const std::uint64_t rest_count = levels[k - j - 1].count;
      layer.assign(moved.count * unmoved.count, 0);
      for (std::uint64_t im = 0; im < moved.count; ++im) {
        const std::uint32_t* ins = moved.insert.data() + im * n;
        for (std::uint64_t iu = 0; iu < unmoved.count; ++iu) {
          const Vertex u = unmoved.row(iu)[0];
          const std::uint64_t rest = unmoved.tail[iu];
          std::uint64_t acc = 0;
          for (Vertex c : VertexSet(closed[u])) acc |= next_layer[ins[c] * rest_count + rest];
          layer[im * unmoved.count + iu] = acc;
        }
      }
      next_layer.swap(layer);
    }
    bool changed = false;
    for (std::uint64_t i = 0; i < configs; ++i) {
      const std::uint64_t now = occupied[i] | next_layer[i];
      const std::uint64_t added = now & ~captured[i];
      if (added == 0) continue;
      changed = true;
      for (Vertex r : VertexSet(added)) game.value_[i * n + r] = static_cast<std::uint16_t>(t);
      captured[i] = now;
    }
    if (!changed) break;
  }
  return game;
}

std::vector<Vertex> CopGame::canonical(std::span<const Vertex> cops) const {
  if (static_cast<int>(cops.size()) != cops_) {
    throw ParameterError("expected " + std::to_string(cops_) + " cops, got " + std::to_string(cops.size()));
  }
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  for (Vertex c : sorted) {
    if (c < 0 || c >= graph_.order()) throw ParameterError("cop vertex out of range");
  }
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::uint64_t CopGame::config_rank(std::span<const Vertex> cops) const { return index_.rank(canonical(cops)); }

ExtendedInt CopGame::cops_to_move(std::span<const Vertex> cops, Vertex robber) const {
  if (robber < 0 || robber >= graph_.order()) throw ParameterError("robber vertex out of range");
  return decode(value_[config_rank(cops) * graph_.order() + robber]);
}

ExtendedInt CopGame::robber_to_move(std::span<const Vertex> cops, Vertex robber) const {
  const VertexSet occupied = as_set(cops);
  if (occupied.contains(robber)) return 0;
  ExtendedInt worst = 0;
  for (Vertex r : graph_.closed_neighborhood(robber) - occupied) worst = std::max(worst, cops_to_move(cops, r));
  return worst;
}

ExtendedInt CopGame::value(const GamePosition& position) const {
  return position.to_move == Side::cops ? cops_to_move(position.cops, position.robber)
                                        : robber_to_move(position.cops, position.robber);
}

ExtendedInt CopGame::capture_time(std::span<const Vertex> placement) const {
  const VertexSet occupied = as_set(placement);
  ExtendedInt worst = 0;
  for (Vertex r : graph_.vertices() - occupied) worst = std::max(worst, cops_to_move(placement, r));
  return worst;
}

ExtendedInt CopGame::capture_time(VertexSet placement) const {
  const std::vector<Vertex> cops = placement.to_vector();
  return capture_time(std::span<const Vertex>(cops));
}

bool CopGame::verify_fixpoint() const {
  const int n = graph_.order();
  for (std::uint64_t i = 0; i < configs_; ++i) {
    const std::vector<Vertex> cops = index_.unrank(cops_, i);
    const VertexSet occupied = as_set(cops);
    for (Vertex r = 0; r < n; ++r) {
      ExtendedInt expected = 0;
      if (!occupied.contains(r)) {
        ExtendedInt best = ExtendedInt::infinity();
        for_each_joint_move(graph_, cops, [&](std::span<const Vertex> next) {
          best = std::min(best, robber_to_move(next, r));
        });
        expected = plus_one(best);
      }
      if (expected != decode(value_[i * n + r])) return false;
    }
  }
  return true;
}

std::string CopGame::strategy_dump(std::span<const Vertex> placement) const {
  const std::vector<Vertex> cops = canonical(placement);
  const VertexSet occupied = as_set(cops);
  auto list = [](std::span<const Vertex> vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "]";
  };
  std::string out;
  for (Vertex r : graph_.vertices() - occupied) {
    ExtendedInt best = ExtendedInt::infinity();
    std::vector<Vertex> choice = cops;
    for_each_joint_move(graph_, cops, [&](std::span<const Vertex> next) {
      const ExtendedInt v = robber_to_move(next, r);
      if (v < best) {
        best = v;
        choice.assign(next.begin(), next.end());
      }
    });
    std::sort(choice.begin(), choice.end());
    out += "robber " + std::to_string(r) + ": cops " + list(cops) + " -> " + list(choice) +
           " capture in " + plus_one(best).to_string() + "\n";
  }
  return out;
}

ExtendedInt capture_time(const Graph& g, std::span<const Vertex> cops, const CopOptions& options) {
  if (cops.empty()) throw ParameterError("capture_time needs at least one cop");
  for (Vertex c : cops) {
    if (c < 0 || c >= g.order()) throw ParameterError("cop vertex out of range");
  }
  if (as_set(cops) == g.vertices()) return 0;
  return CopGame::solve(g, static_cast<int>(cops.size()), options).capture_time(cops);
}

ExtendedInt capture_time(const Graph& g, VertexSet cops, const CopOptions& options) {
  const std::vector<Vertex> list = cops.to_vector();
  return capture_time(g, std::span<const Vertex>(list), options);
}

CaptureWitness capt_k(const Graph& g, int k, const CopOptions& options) {
  const int n = g.order();
  if (k < 1 || k > n) throw ParameterError("capt_k needs 1 <= k <= n");
  if (k == n) return {0, g.vertices()};
  const CopGame game = CopGame::solve(g, k, options);
  CaptureWitness best;
  for_each_k_subset(n, k, [&](VertexSet s) {
    const ExtendedInt v = game.capture_time(s);
    if (v < best.value) best = {v, s};
    // k < n cops leave a robber start, so one round is the floor.
    return best.value != ExtendedInt(1);
  });
  return best;
}

int cop_number(const Graph& g, const CopOptions& options) {
  for (int k = 1; k <= g.order(); ++k) {
    if (capt_k(g, k, options).value.is_finite()) return k;
  }
  throw ParameterError("cop_number needs a non-empty graph");
}

CopThrottling th_times_cops(const Graph& g, const CopOptions& options) {
  const int n = g.order();
  CopThrottling out;
  out.cop_number = cop_number(g, options);
  // k = n gives n (1 + 0).
  out.th_times = n;
  out.th_times_witness = g.vertices();
  out.th_times_capture = 0;
  for (int k = out.cop_number; k < n; ++k) {
    const bool need_times = 2 * k < out.th_times;
    const bool need_star = !out.th_star || k < *out.th_star;
    if (!need_times && !need_star) break;
    const CaptureWitness w = capt_k(g, k, options);
    if (w.value.is_infinite()) continue;
    const int capt = w.value.value();
    if (k * (1 + capt) < out.th_times) {
      out.th_times = k * (1 + capt);
      out.th_times_witness = w.placement;
      out.th_times_capture = capt;
    }
    if (!out.th_star || k * capt < *out.th_star) {
      out.th_star = k * capt;
      out.th_star_witness = w.placement;
    }
  }
  return out;
}

}  // namespace psdthrottle
