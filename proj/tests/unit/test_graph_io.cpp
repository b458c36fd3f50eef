#include <gtest/gtest.h>

#include <random>

#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/graph_io.hpp"

namespace psdthrottle {
namespace {

TEST(Graph6, KnownStrings) {
  const Graph g = decode_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  const std::vector<Edge> star_edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  EXPECT_EQ(g.edges(), star_edges);
  EXPECT_EQ(encode_graph6(g), "D?{");
  EXPECT_EQ(encode_graph6(complete(1)), "@");
  EXPECT_EQ(encode_graph6(complete(4)), "C~");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(decode_graph6(">>graph6<<C~"), complete(4));
}

TEST(Graph6, PetersenMatchesReferenceEncoder) {
  const Graph g = decode_graph6("IheA@GUAo");
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15);
  EXPECT_EQ(encode_graph6(g), "IheA@GUAo");
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(n, rng(), 1 + static_cast<int>(rng() % 3), 4);
    const std::string text = encode_graph6(g);
    const Graph back = decode_graph6(text);
    ASSERT_EQ(back.edges(), g.edges());
    ASSERT_EQ(encode_graph6(back), text);
  }
}

TEST(Graph6, LongHeader) {
  const Graph g = cycle(64);
  const std::string text = encode_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~?@?");
  EXPECT_EQ(decode_graph6(text), g);
}

TEST(Graph6, Errors) {
  try {
    decode_graph6("garbage\x01");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7U);
  }
  EXPECT_THROW(decode_graph6(""), ParseError);
  EXPECT_THROW(decode_graph6("D?"), ParseError);
  EXPECT_THROW(decode_graph6("D?{?"), ParseError);
  // K_2 with a padding bit set.
  EXPECT_THROW(decode_graph6("Aa"), ParseError);
  EXPECT_THROW(decode_graph6("~?"), ParseError);
  // Order 65.
  EXPECT_THROW(decode_graph6("~?@@"), SizeError);
}

TEST(Graph6, StreamSkipsCommentsAndBlanks) {
  std::istringstream in("# header\nC~\n\nD?{\n");
  const auto graphs = read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 2U);
  EXPECT_EQ(graphs[0], complete(4));
}

TEST(EdgeList, RoundTripAndErrors) {
  const Graph g = cycle(5);
  const std::string text = format_edge_list(g);
  EXPECT_EQ(text.substr(0, 4), "5 5\n");
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2\n"), path(3));
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 7\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n0 1\n"), ParameterError);
}

}  // namespace
}  // namespace psdthrottle
