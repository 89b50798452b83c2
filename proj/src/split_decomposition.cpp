#include "smw/split_decomposition.hpp"

#include <algorithm>
#include <deque>

#include "smw/error.hpp"

namespace smw {

namespace {

/// Least superset of seed closed under the split implications for the
/// crossing edge ab, or nullopt once b would be forced into the same side.
std::optional<VertexSet> split_closure(const Graph& g, Vertex a, Vertex b, const VertexSet& seed) {
  VertexSet side = seed;
  std::deque<Vertex> queue;
  for (auto v : seed) queue.push_back(static_cast<Vertex>(v));
  const VertexSet& na = g.neighbors(a);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    VertexSet forced = g.neighbors(u).test(b) ? (g.neighbors(u) ^ na) : g.neighbors(u);
    forced.reset(u);
    forced -= side;
    if (forced.test(b)) return std::nullopt;
    side |= forced;
    for (auto w : forced) queue.push_back(static_cast<Vertex>(w));
  }
  return side;
}

}  // namespace

std::optional<Cut> find_split(const Graph& g) {
  if (!g.is_connected()) throw InvalidInput("split search requires a connected graph");
  if (g.vertex_count() < 4) return std::nullopt;
  for (const auto& e : g.edges()) {
    for (int orient = 0; orient < 2; ++orient) {
      const Vertex a = orient == 0 ? e.u : e.v;
      const Vertex b = orient == 0 ? e.v : e.u;
      for (auto x : g.vertices()) {
        if (x == a || x == b) continue;
        VertexSet seed = VertexSet::single(a);
        seed.set(x);
        const auto side = split_closure(g, a, b, seed);
        if (!side) continue;
        const VertexSet rest = g.vertices() - *side;
        if (rest.count() >= 2) return Cut{*side, rest};
      }
    }
  }
  return std::nullopt;
}

SplitDecomposition::SplitDecomposition(Graph original, std::vector<Graph> primes)
    : original_(std::move(original)), primes_(std::move(primes)) {
  id_bound_ = original_.id_bound();
  for (const auto& p : primes_) {
    id_bound_ = std::max(id_bound_, p.id_bound());
    marker_ids_ |= p.vertices() - original_.vertices();
  }
  for (auto m : marker_ids_) {
    MarkerLink link{static_cast<Vertex>(m), primes_.size(), primes_.size()};
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (!primes_[i].has_vertex(static_cast<Vertex>(m))) continue;
      if (link.prime_a == primes_.size()) {
        link.prime_a = i;
      } else if (link.prime_b == primes_.size()) {
        link.prime_b = i;
      } else {
        throw InvalidInput("marker appears in more than two primes");
      }
    }
    if (link.prime_b == primes_.size()) throw InvalidInput("marker appears in fewer than two primes");
    markers_.push_back(link);
  }

  // Adjacency of the decomposition tree, labelled by marker.
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> tree(primes_.size());
  for (const auto& link : markers_) {
    tree[link.prime_a].emplace_back(link.prime_b, link.marker);
    tree[link.prime_b].emplace_back(link.prime_a, link.marker);
  }

  tot_.assign(primes_.size(), std::vector<VertexSet>(id_bound_));
  act_.assign(primes_.size(), std::vector<VertexSet>(id_bound_));
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    for (auto v : primes_[i].vertices()) {
      VertexSet t;
      if (original_.has_vertex(static_cast<Vertex>(v))) {
        t.set(v);
      } else {
        // Original vertices of the primes on the far side of marker v.
        std::size_t start = primes_.size();
        for (const auto& [j, m] : tree[i])
          if (m == v) start = j;
        std::vector<bool> seen(primes_.size(), false);
        seen[i] = true;
        seen[start] = true;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
          const std::size_t p = queue.front();
          queue.pop_front();
          t |= primes_[p].vertices() & original_.vertices();
          for (const auto& [q, m] : tree[p]) {
            if (!seen[q]) {
              seen[q] = true;
              queue.push_back(q);
            }
          }
        }
      }
      tot_[i][v] = t;
      act_[i][v] = frontier(original_, t);
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> SplitDecomposition::tree_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& link : markers_) out.emplace_back(link.prime_a, link.prime_b);
  return out;
}

const VertexSet& SplitDecomposition::tot(std::size_t prime, Vertex v) const {
  if (prime >= primes_.size() || !primes_[prime].has_vertex(v))
    throw InvalidInput("vertex " + std::to_string(v) + " is not in the chosen prime");
  return tot_[prime][v];
}

VertexSet SplitDecomposition::tot(std::size_t prime, const VertexSet& x) const {
  VertexSet out;
  for (auto v : x) out |= tot(prime, static_cast<Vertex>(v));
  return out;
}

const VertexSet& SplitDecomposition::act(std::size_t prime, Vertex v) const {
  if (prime >= primes_.size() || !primes_[prime].has_vertex(v))
    throw InvalidInput("vertex " + std::to_string(v) + " is not in the chosen prime");
  return act_[prime][v];
}

Graph SplitDecomposition::recompose() const {
  if (primes_.empty()) return Graph{};
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> tree(primes_.size());
  for (const auto& link : markers_) {
    tree[link.prime_a].emplace_back(link.prime_b, link.marker);
    tree[link.prime_b].emplace_back(link.prime_a, link.marker);
  }
  VertexSet verts = primes_[0].vertices();
  std::vector<Edge> edges = primes_[0].edges();
  std::vector<bool> seen(primes_.size(), false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& [q, m] : tree[p]) {
      if (seen[q]) continue;
      seen[q] = true;
      queue.push_back(q);
      const Graph current(verts, edges);
      const VertexSet near = current.neighbors(m);
      const VertexSet far = primes_[q].neighbors(m);
      std::vector<Edge> merged;
      for (const auto& e : edges)
        if (!e.has(m)) merged.push_back(e);
      for (const auto& e : primes_[q].edges())
        if (!e.has(m)) merged.push_back(e);
      for (auto x : near)
        for (auto y : far) merged.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
      verts |= primes_[q].vertices();
      verts.reset(m);
      edges = std::move(merged);
    }
  }
  return Graph(verts, edges);
}

SplitDecomposition split_decompose(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("empty graph");
  if (!g.is_connected()) throw InvalidInput("split decomposition requires a connected graph");
  Vertex next_marker = static_cast<Vertex>(g.id_bound());
  std::vector<Graph> primes;
  std::vector<Graph> stack{g};
  while (!stack.empty()) {
    Graph h = std::move(stack.back());
    stack.pop_back();
    const auto split = find_split(h);
    if (!split) {
      primes.push_back(std::move(h));
      continue;
    }
    if (next_marker >= kMaxVertexId) throw InvalidInput("graph too large for marker id space");
    const Vertex marker = next_marker++;
    auto side_graph = [&](const VertexSet& side) {
      VertexSet verts = side;
      verts.set(marker);
      std::vector<Edge> edges = h.edge_list(h.edges_within(side));
      for (auto v : frontier(h, side)) edges.emplace_back(static_cast<Vertex>(v), marker);
      return Graph(verts, edges);
    };
    // Second side is pushed last so it is decomposed first; order only
    // affects prime numbering.
    stack.push_back(side_graph(split->side_b));
    stack.push_back(side_graph(split->side_a));
  }
  return SplitDecomposition(g, std::move(primes));
}

std::size_t lifted_value(const LiftedContext& ctx, const VertexSet& x, const CutFunction& f) {
  return f(ctx.tot(x));
}

CutFunction lifted(const LiftedContext& ctx, const CutFunction& f) {
  return {"lifted-" + f.name, ctx.prime().vertices(), [ctx, f](const VertexSet& x) { return f(ctx.tot(x)); }};
}

}  // namespace smw
