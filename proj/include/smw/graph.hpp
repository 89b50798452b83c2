#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "smw/bits.hpp"

namespace smw {

using Vertex = std::uint32_t;

/// Vertex ids live in [0, kMaxVertexId). Marker and contraction vertices
/// take fresh ids above the original range, so the cap bounds n plus markers.
inline constexpr std::size_t kMaxVertexId = 128;
inline constexpr std::size_t kMaxEdges = 512;

using VertexSet = Bits<kMaxVertexId / 64>;
using EdgeSet = Bits<kMaxEdges / 64>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Normalises so that u < v.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }
  [[nodiscard]] bool has(Vertex x) const { return x == u || x == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A bipartition of a ground set.
struct Cut {
  VertexSet side_a;
  VertexSet side_b;
};

/// Immutable simple undirected graph over an arbitrary set of vertex ids.
/// Edges are kept sorted; edge i of the sorted list is bit i of an EdgeSet.
class Graph {
 public:
  Graph() = default;

  /// Vertices 0..n-1.
  Graph(std::size_t n, const std::vector<Edge>& edges);
  Graph(const VertexSet& vertices, const std::vector<Edge>& edges);

  static Graph complete(const VertexSet& vertices);

  [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t i) const { return edges_[i]; }
  [[nodiscard]] bool has_vertex(Vertex v) const { return vertices_.test(v); }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  /// Index of edge uv, or -1.
  [[nodiscard]] int edge_index(Vertex u, Vertex v) const;
  [[nodiscard]] const VertexSet& neighbors(Vertex v) const;
  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).count(); }
  /// One past the largest vertex id in use.
  [[nodiscard]] std::size_t id_bound() const { return adj_.size(); }
  [[nodiscard]] EdgeSet all_edges() const { return EdgeSet::prefix(edges_.size()); }
  [[nodiscard]] bool is_connected() const;

  /// Edges with both endpoints in a.
  [[nodiscard]] EdgeSet edges_within(const VertexSet& a) const;
  /// Edges with one endpoint in a and the other in b (a, b disjoint).
  [[nodiscard]] EdgeSet edges_between(const VertexSet& a, const VertexSet& b) const;
  [[nodiscard]] EdgeSet incident_edges(const VertexSet& a) const;

  [[nodiscard]] std::vector<Edge> edge_list(const EdgeSet& s) const;
  [[nodiscard]] EdgeSet edge_set(const std::vector<Edge>& edges) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void build(const std::vector<Edge>& edges);

  VertexSet vertices_;
  std::size_t vertex_count_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<std::int16_t> edge_index_;
};

/// Bipartite graph together with its declared sides.
struct BipartiteGraph {
  Graph graph;
  VertexSet side_a;
  VertexSet side_b;
};

[[nodiscard]] Graph induced_subgraph(const Graph& g, const VertexSet& a);
[[nodiscard]] BipartiteGraph cut_graph(const Graph& g, const VertexSet& a);
/// Contracts uv into a fresh vertex with id g.id_bound().
[[nodiscard]] std::pair<Graph, Vertex> contract_edge(const Graph& g, const Edge& uv);
/// N(s): vertices outside s adjacent to s.
[[nodiscard]] VertexSet neighborhood(const Graph& g, const VertexSet& s);

[[nodiscard]] inline VertexSet complement(const Graph& g, const VertexSet& a) {
  return g.vertices() - a;
}

/// Edge-list text format: "n m" then m lines "u v"; blank lines and
/// '#' comments are ignored. Throws InvalidInput on malformed input.
[[nodiscard]] Graph parse_edge_list(std::istream& in);
[[nodiscard]] Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

[[nodiscard]] std::string to_string(const VertexSet& s);

}  // namespace smw
