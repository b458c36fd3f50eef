// Writes every graph on 1..N vertices up to isomorphism, one graph6 line each.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "psdthrottle/graph_io.hpp"
#include "psdthrottle/isomorphism.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: make_corpus MAX_N OUTPUT\n";
    return 2;
  }
  const int max_n = std::atoi(argv[1]);
  std::ofstream out(argv[2]);
  if (!out) {
    std::cerr << "cannot open " << argv[2] << "\n";
    return 2;
  }
  out << "# all graphs on 1.." << max_n << " vertices up to isomorphism, graph6\n";
  for (int n = 1; n <= max_n; ++n) {
    const auto graphs = psdthrottle::enumerate_graphs(n);
    std::cerr << "n=" << n << ": " << graphs.size() << "\n";
    for (const auto& g : graphs) out << psdthrottle::encode_graph6(g) << "\n";
  }
  return 0;
}
