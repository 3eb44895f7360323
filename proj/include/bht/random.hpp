#pragma once

#include <random>

#include "bht/graph.hpp"

namespace bht {

// Uniform edge-subset sampling (each pair independently with probability p).
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  for (int tries = 0; tries < 100000; ++tries) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("could not sample a connected graph; raise p");
}

}  // namespace bht
