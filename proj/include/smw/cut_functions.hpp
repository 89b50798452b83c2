#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "smw/graph.hpp"

namespace smw {

/// Vertex-disjoint edges of a bipartite cut graph, each oriented side_a -> side_b.
using Matching = std::vector<Edge>;

/// Maximum matching by repeated augmenting-path search.
[[nodiscard]] Matching max_matching(const BipartiteGraph& b);

/// Minimum vertex cover of b via the Koenig construction from a maximum matching.
[[nodiscard]] VertexSet min_vertex_cover(const BipartiteGraph& b);

/// mm(a): size of a maximum matching of G[a, V \ a]. No graph is materialised.
[[nodiscard]] std::size_t mm_value(const Graph& g, const VertexSet& a);

/// Minimum vertex cover of G[a, V \ a].
[[nodiscard]] VertexSet cut_vertex_cover(const Graph& g, const VertexSet& a);

/// Vertices of a with a neighbour outside a.
[[nodiscard]] VertexSet frontier(const Graph& g, const VertexSet& a);

/// True iff (a, V \ a) is a split: both sides have at least two vertices and
/// every vertex of a adjacent to the other side has the same neighbourhood there.
/// Throws InvalidInput if g is disconnected.
[[nodiscard]] bool is_split(const Graph& g, const VertexSet& a);

/// Same test without the connectivity check; for hot loops over a graph already
/// known to be connected.
[[nodiscard]] bool is_split_unchecked(const Graph& g, const VertexSet& a);

/// 1 on splits, mm otherwise. Trivial bipartitions go through the mm branch.
[[nodiscard]] std::size_t sm_value(const Graph& g, const VertexSet& a);

/// A named symmetric set function over a fixed domain.
struct CutFunction {
  std::string name;
  VertexSet domain;
  std::function<std::size_t(const VertexSet&)> eval;

  std::size_t operator()(const VertexSet& s) const { return eval(s); }
};

[[nodiscard]] CutFunction mm_function(const Graph& g);
[[nodiscard]] CutFunction sm_function(const Graph& g);

}  // namespace smw
