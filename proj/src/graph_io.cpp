#include "psdthrottle/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "psdthrottle/error.hpp"

namespace psdthrottle {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside the graph6 alphabet [63, 126]", pos);
  return c - 63;
}

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("missing order header", pos);
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text, i);

  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = sextet(text, pos);
    pos += 1;
  } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
    if (pos + 8 > text.size()) throw ParseError("truncated 8-byte order header", pos);
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + i));
    pos += 8;
  } else {
    if (pos + 4 > text.size()) throw ParseError("truncated 4-byte order header", pos);
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + i));
    pos += 4;
  }
  if (n > static_cast<std::uint64_t>(Graph::kMaxVertices)) {
    throw SizeError("graph6 order " + std::to_string(n) + " exceeds the 64-vertex limit");
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("expected " + std::to_string(body) + " data bytes, found " + std::to_string(text.size() - pos),
                     text.size() - pos < body ? text.size() : pos + body);
  }

  std::vector<VertexSet> adjacency(order);
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) {
        adjacency[i].insert(j);
        adjacency[j].insert(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(text, last) & pad_mask) throw ParseError("nonzero padding bits", last);
  }
  return Graph::from_adjacency(std::move(adjacency));
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  append_order(out, g.order());
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open graph6 file '" + path + "'");
  return read_graph6_stream(in);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list must start with 'n m'", 0);
  if (n > Graph::kMaxVertices) throw SizeError("edge list order exceeds the 64-vertex limit");
  const auto offset = [&] {
    in.clear();
    const auto p = in.tellg();
    return p < 0 ? text.size() : static_cast<std::size_t>(p);
  };
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw ParseError("expected " + std::to_string(m) + " edges, read " + std::to_string(i), offset());
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range", offset());
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after " + std::to_string(m) + " edges", offset());
  return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace psdthrottle
