#include "smw/cut_functions.hpp"

#include <array>
#include <memory>

#include "smw/error.hpp"

namespace smw {

namespace {

constexpr int kUnmatched = -1;

/// Kuhn's augmenting-path matching between left and right using g's adjacency.
class Matcher {
 public:
  Matcher(const Graph& g, const VertexSet& left, const VertexSet& right)
      : g_(g), left_(left), right_(right) {
    mate_.fill(kUnmatched);
  }

  std::size_t run() {
    std::size_t size = 0;
    for (auto u : left_) {
      if ((g_.neighbors(static_cast<Vertex>(u)) & right_).empty()) continue;
      VertexSet visited;
      if (augment(static_cast<Vertex>(u), visited)) ++size;
    }
    return size;
  }

  [[nodiscard]] int mate(Vertex v) const { return mate_[v]; }

 private:
  bool augment(Vertex u, VertexSet& visited) {
    const VertexSet cand = (g_.neighbors(u) & right_) - visited;
    for (auto w : cand) {
      if (visited.test(w)) continue;
      visited.set(w);
      if (mate_[w] == kUnmatched || augment(static_cast<Vertex>(mate_[w]), visited)) {
        mate_[w] = static_cast<int>(u);
        mate_[u] = static_cast<int>(w);
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  VertexSet left_;
  VertexSet right_;
  std::array<int, kMaxVertexId> mate_{};
};

VertexSet koenig_cover(const Graph& g, const VertexSet& left, const VertexSet& right) {
  Matcher m(g, left, right);
  m.run();
  // Alternating reachability from unmatched left vertices.
  VertexSet reach_left;
  for (auto u : left)
    if (m.mate(static_cast<Vertex>(u)) == kUnmatched) reach_left.set(u);
  VertexSet reach_right;
  VertexSet frontier = reach_left;
  while (frontier.any()) {
    VertexSet new_right;
    for (auto u : frontier) new_right |= g.neighbors(static_cast<Vertex>(u)) & right;
    new_right -= reach_right;
    reach_right |= new_right;
    VertexSet new_left;
    for (auto w : new_right) {
      const int mu = m.mate(static_cast<Vertex>(w));
      if (mu != kUnmatched && !reach_left.test(static_cast<std::size_t>(mu))) new_left.set(static_cast<std::size_t>(mu));
    }
    reach_left |= new_left;
    frontier = new_left;
  }
  return (left - reach_left) | (right & reach_right);
}

}  // namespace

Matching max_matching(const BipartiteGraph& b) {
  Matcher m(b.graph, b.side_a, b.side_b);
  m.run();
  Matching out;
  for (auto u : b.side_a) {
    const int w = m.mate(static_cast<Vertex>(u));
    if (w != kUnmatched) out.push_back(Edge(static_cast<Vertex>(u), static_cast<Vertex>(w)));
  }
  return out;
}

VertexSet min_vertex_cover(const BipartiteGraph& b) { return koenig_cover(b.graph, b.side_a, b.side_b); }

std::size_t mm_value(const Graph& g, const VertexSet& a) {
  const VertexSet left = a & g.vertices();
  const VertexSet right = g.vertices() - a;
  // Matching from the smaller side keeps the recursion shallow.
  if (left.count() <= right.count()) return Matcher(g, left, right).run();
  return Matcher(g, right, left).run();
}

VertexSet cut_vertex_cover(const Graph& g, const VertexSet& a) {
  return koenig_cover(g, a & g.vertices(), g.vertices() - a);
}

VertexSet frontier(const Graph& g, const VertexSet& a) {
  const VertexSet out = g.vertices() - a;
  VertexSet f;
  for (auto v : a)
    if (g.neighbors(static_cast<Vertex>(v)).intersects(out)) f.set(v);
  return f;
}

bool is_split_unchecked(const Graph& g, const VertexSet& a) {
  const VertexSet side = a & g.vertices();
  const VertexSet other = g.vertices() - side;
  if (side.count() < 2 || other.count() < 2) return false;
  bool have = false;
  VertexSet common;
  for (auto v : side) {
    const VertexSet nb = g.neighbors(static_cast<Vertex>(v)) & other;
    if (nb.empty()) continue;
    if (!have) {
      common = nb;
      have = true;
    } else if (nb != common) {
      return false;
    }
  }
  return have;
}

bool is_split(const Graph& g, const VertexSet& a) {
  if (!g.is_connected()) throw InvalidInput("split test requires a connected graph");
  return is_split_unchecked(g, a);
}

std::size_t sm_value(const Graph& g, const VertexSet& a) {
  if (is_split_unchecked(g, a)) return 1;
  return mm_value(g, a);
}

CutFunction mm_function(const Graph& g) {
  auto shared = std::make_shared<const Graph>(g);
  return {"mm", g.vertices(), [shared](const VertexSet& s) { return mm_value(*shared, s); }};
}

CutFunction sm_function(const Graph& g) {
  if (!g.is_connected()) throw InvalidInput("sm requires a connected graph");
  auto shared = std::make_shared<const Graph>(g);
  return {"sm", g.vertices(), [shared](const VertexSet& s) { return sm_value(*shared, s); }};
}

}  // namespace smw
