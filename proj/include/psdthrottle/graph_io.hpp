#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "psdthrottle/graph.hpp"

namespace psdthrottle {

/// Standard graph6: N(n) followed by the upper triangle of the adjacency
/// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per
/// byte offset by 63, zero-padded. An optional ">>graph6<<" prefix is accepted.
/// Throws ParseError (with byte offset) on malformed input and SizeError when
/// n exceeds 64.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// One graph6 string per non-empty line; lines starting with '#' are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

/// "n m" header then m lines "u v" (0-indexed).
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace psdthrottle
