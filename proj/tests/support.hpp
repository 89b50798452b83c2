#pragma once

#include <cstddef>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "smw/graph.hpp"

namespace smw::test {

inline Graph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline VertexSet vs(std::initializer_list<Vertex> ids) {
  VertexSet s;
  for (auto v : ids) s.set(v);
  return s;
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph complete(std::size_t n) { return Graph::complete(VertexSet::prefix(n)); }

inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) edges.emplace_back(i, static_cast<Vertex>(m + j));
  return Graph(m + n, edges);
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// Outer ring 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, edges);
}

/// a..g = 0..6 with edges ab, ag, cg, be, ce, de, ef. Splits along
/// ({a,b,c,g}, {d,e,f}) and then ({d}, {e,f}) into three primes.
inline Graph seven_vertex_split_graph() {
  return from_pairs(7, {{0, 1}, {0, 6}, {2, 6}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (g.is_connected()) return g;
  }
}

inline VertexSet random_subset(const VertexSet& ground, std::mt19937_64& rng) {
  VertexSet s;
  for (auto v : ground)
    if (rng() & 1U) s.set(v);
  return s;
}

/// Subsets of ground as masks over its sorted elements.
inline std::vector<VertexSet> all_subsets(const VertexSet& ground) {
  std::vector<std::size_t> el(ground.begin(), ground.end());
  std::vector<VertexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << el.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < el.size(); ++i)
      if ((mask >> i) & 1U) s.set(el[i]);
    out.push_back(s);
  }
  return out;
}

}  // namespace smw::test
