#include "smw/generators.hpp"

#include <vector>

#include "smw/error.hpp"

namespace smw {

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  if (n == 0) throw InvalidInput("random_connected_graph: n must be positive");
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g(n, edges);
    if (g.is_connected()) return g;
  }
}

Graph banded_graph(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k == 0 || n <= k) throw InvalidInput("banded_graph: need 0 < k < n");
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex d = 1; d <= k && i + d < n; ++d)
      if (d == 1 || d == k || coin(rng)) edges.emplace_back(i, i + d);
  return Graph(n, edges);
}

}  // namespace smw
