#include <doctest.h>

#include <optional>

#include "smw/cut_functions.hpp"
#include "smw/error.hpp"
#include "support.hpp"

using namespace smw;
using namespace smw::test;

namespace {

/// Largest set of pairwise disjoint edges, by subset search.
std::size_t brute_matching(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    VertexSet used;
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const auto& e = g.edge(i);
      if (used.test(e.u) || used.test(e.v)) ok = false;
      used.set(e.u);
      used.set(e.v);
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

bool covers(const Graph& g, const VertexSet& c) {
  for (const auto& e : g.edges())
    if (!c.test(e.u) && !c.test(e.v)) return false;
  return true;
}

std::size_t brute_cover(const Graph& g) {
  std::size_t best = g.vertex_count();
  for (const auto& c : all_subsets(g.vertices()))
    if (covers(g, c)) best = std::min(best, c.count());
  return best;
}

/// Split test straight from the definition.
bool split_by_definition(const Graph& g, const VertexSet& a) {
  const VertexSet b = g.vertices() - a;
  if (a.count() < 2 || b.count() < 2) return false;
  std::optional<VertexSet> common;
  for (auto v : a) {
    const VertexSet nb = g.neighbors(static_cast<Vertex>(v)) & b;
    if (nb.empty()) continue;
    if (common && *common != nb) return false;
    common = nb;
  }
  return true;
}

}  // namespace

TEST_CASE("matching and cover on the 4-cycle cut") {
  const auto b = cut_graph(cycle(4), vs({0, 1}));
  CHECK(max_matching(b).size() == 2);
  CHECK(min_vertex_cover(b).count() == 2);
}

TEST_CASE("star cut center versus leaves") {
  const auto b = cut_graph(star(5), vs({0}));
  CHECK(max_matching(b).size() == 1);
  CHECK(min_vertex_cover(b) == vs({0}));
}

TEST_CASE("edgeless bipartite graph has an empty cover") {
  const Graph g(4, {});
  CHECK(min_vertex_cover(cut_graph(g, vs({0, 1}))).empty());
}

TEST_CASE("matching and cover agree with subset search on random cuts") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = random_graph(n, 0.4, rng);
    const VertexSet a = random_subset(g.vertices(), rng);
    const auto b = cut_graph(g, a);
    if (b.graph.edge_count() > 16) continue;
    const auto m = max_matching(b);
    const auto c = min_vertex_cover(b);
    CHECK(m.size() == brute_matching(b.graph));
    CHECK(covers(b.graph, c));
    CHECK(c.count() == brute_cover(b.graph));
    CHECK(c.count() == m.size());
    VertexSet used;
    for (const auto& e : m) {
      CHECK(a.test(e.u) != a.test(e.v));
      CHECK_FALSE(used.test(e.u));
      CHECK_FALSE(used.test(e.v));
      used.set(e.u);
      used.set(e.v);
    }
  }
}

TEST_CASE("splits of the 4-cycle") {
  CHECK(is_split(cycle(4), vs({0, 2})));
  CHECK_FALSE(is_split(cycle(4), vs({0, 1})));
}

TEST_CASE("no bipartition of C5 is a split") {
  for (const auto& a : all_subsets(cycle(5).vertices())) CHECK_FALSE(is_split(cycle(5), a));
}

TEST_CASE("is_split rejects disconnected graphs") {
  CHECK_THROWS_AS((void)is_split(Graph(4, {Edge(0, 1), Edge(2, 3)}), vs({0, 2})), InvalidInput);
}

TEST_CASE("is_split matches the definition") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected(7, 0.5, rng);
    for (const auto& a : all_subsets(g.vertices())) CHECK(is_split(g, a) == split_by_definition(g, a));
  }
}

TEST_CASE("sm values of the 4-cycle and K6") {
  CHECK(sm_value(cycle(4), vs({0, 2})) == 1);
  CHECK(sm_value(cycle(4), vs({0, 1})) == 2);
  const Graph k6 = complete(6);
  for (const auto& a : all_subsets(k6.vertices()))
    if (a.count() >= 2 && a.count() <= 4) CHECK(sm_value(k6, a) == 1);
}

TEST_CASE("trivial bipartitions take the mm branch") {
  CHECK(sm_value(star(4), vs({0})) == 1);
  CHECK(sm_value(star(4), vs({1})) == 1);
  CHECK(sm_value(star(4), VertexSet{}) == 0);
}

TEST_CASE("symmetry, sm at most mm, and mm submodularity") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected(1 + rng() % 8, 0.5, rng);
    const auto subsets = all_subsets(g.vertices());
    for (const auto& a : subsets) {
      const VertexSet co = g.vertices() - a;
      CHECK(mm_value(g, a) == mm_value(g, co));
      CHECK(sm_value(g, a) == sm_value(g, co));
      CHECK(sm_value(g, a) <= mm_value(g, a));
    }
    for (int s = 0; s < 100; ++s) {
      const VertexSet a = random_subset(g.vertices(), rng);
      const VertexSet b = random_subset(g.vertices(), rng);
      CHECK(mm_value(g, a) + mm_value(g, b) >= mm_value(g, a | b) + mm_value(g, a & b));
    }
  }
}

TEST_CASE("cut_vertex_cover covers every cut edge") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(8, 0.4, rng);
    const VertexSet a = random_subset(g.vertices(), rng);
    const VertexSet c = cut_vertex_cover(g, a);
    CHECK(c.count() == mm_value(g, a));
    for (auto i : g.edges_between(a, g.vertices() - a)) CHECK((c.test(g.edge(i).u) || c.test(g.edge(i).v)));
  }
}

TEST_CASE("cut functions carry their domain") {
  const Graph g = cycle(5);
  const CutFunction f = mm_function(g);
  CHECK(f.domain == g.vertices());
  CHECK(f(vs({0, 1})) == 2);
  CHECK(sm_function(g)(vs({0, 2})) == 2);
}
