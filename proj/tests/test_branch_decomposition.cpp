#include <doctest.h>

#include <functional>

#include "smw/branch_decomposition.hpp"
#include "smw/cut_functions.hpp"
#include "smw/error.hpp"
#include "support.hpp"

using namespace smw;
using namespace smw::test;

namespace {

/// Minimum width over all subcubic trees with leaves labelled by the
/// elements, generated by inserting each further leaf on every edge.
std::size_t min_width_by_tree_enumeration(const CutFunction& f) {
  const std::vector<std::size_t> el(f.domain.begin(), f.domain.end());
  const std::size_t n = el.size();
  if (n <= 1) return 0;
  using Tree = std::vector<std::pair<std::size_t, std::size_t>>;  // nodes 0..n-1 are leaves
  auto width = [&](const Tree& t, std::size_t nodes) {
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (const auto& [x, y] : t) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::size_t w = 0;
    for (const auto& [x, y] : t) {
      VertexSet side;
      std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t from) {
        if (u < n) side.set(el[u]);
        for (auto z : adj[u])
          if (z != from) dfs(z, u);
      };
      dfs(x, y);
      w = std::max(w, f(side));
    }
    return w;
  };
  std::size_t best = SIZE_MAX;
  std::function<void(Tree&, std::size_t, std::size_t)> grow = [&](Tree& t, std::size_t next_leaf, std::size_t nodes) {
    if (next_leaf == n) {
      best = std::min(best, width(t, nodes));
      return;
    }
    const std::size_t edges = t.size();
    for (std::size_t i = 0; i < edges; ++i) {
      const auto [x, y] = t[i];
      const std::size_t z = nodes;
      t[i] = {x, z};
      t.push_back({z, y});
      t.push_back({z, next_leaf});
      grow(t, next_leaf + 1, nodes + 1);
      t.pop_back();
      t.pop_back();
      t[i] = {x, y};
    }
  };
  Tree t{{0, 1}};
  grow(t, 2, std::max<std::size_t>(n, 2));
  return best;
}

}  // namespace

TEST_CASE("cut counts") {
  auto two = from_bisection(vs({3, 5}), [](const VertexSet& s) { return VertexSet::single(s.first()); });
  const auto c2 = cuts(two);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].side_a.count() == 1);
  CHECK(c2[0].side_b.count() == 1);
  CHECK(cuts(caterpillar(vs({0, 1, 2, 3}))).size() == 5);
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto bd = caterpillar(VertexSet::prefix(n));
    CHECK(cuts(bd).size() == 2 * n - 3);
    CHECK(bd.elements() == VertexSet::prefix(n));
  }
}

TEST_CASE("every cut partitions the elements and leaf cuts appear once") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_connected(3 + rng() % 8, 0.5, rng);
    const auto bd = approx_decomposition(mm_function(g), g.vertices(), Backend::kGreedy);
    VertexSet singles;
    for (const auto& c : cuts(bd)) {
      CHECK((c.side_a | c.side_b) == g.vertices());
      CHECK_FALSE(c.side_a.intersects(c.side_b));
      for (const auto* s : {&c.side_a, &c.side_b})
        if (s->count() == 1) {
          CHECK_FALSE(singles.test(s->first()));
          singles.set(s->first());
        }
    }
    CHECK(singles == g.vertices());
  }
}

TEST_CASE("width examples") {
  CHECK(f_width(caterpillar(complete(6).vertices()), sm_function(complete(6))) == 1);
  CHECK(exact_best_decomposition(sm_function(cycle(4))).width == 1);
  CHECK(exact_best_decomposition(mm_function(cycle(5))).width == 2);
  CHECK(exact_best_decomposition(mm_function(path(4))).width == 1);
  CHECK(exact_best_decomposition(sm_function(complete(5))).width == 1);
  CHECK(min_width_by_tree_enumeration(sm_function(cycle(4))) == 1);
  CHECK(min_width_by_tree_enumeration(mm_function(cycle(5))) == 2);
  CHECK(min_width_by_tree_enumeration(mm_function(path(4))) == 1);
}

TEST_CASE("exact decomposition matches tree enumeration") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected(3 + rng() % 5, 0.3 + 0.1 * static_cast<double>(rng() % 5), rng);
    for (const auto& f : {mm_function(g), sm_function(g)}) {
      const auto r = exact_best_decomposition(f);
      CHECK(r.width == min_width_by_tree_enumeration(f));
      CHECK(f_width(r.decomposition, f) == r.width);
      CHECK(r.decomposition.elements() == g.vertices());
      r.decomposition.validate();
    }
  }
}

TEST_CASE("exact decomposition refuses above its limit") {
  CHECK_THROWS_AS((void)exact_best_decomposition(mm_function(cycle(9)), 8), Refused);
  CHECK_THROWS_AS((void)approx_decomposition(mm_function(cycle(9)), cycle(9).vertices(), Backend::kExact, 8),
                  Refused);
}

TEST_CASE("backends on C5 and K6") {
  const Graph c5 = cycle(5);
  CHECK(f_width(approx_decomposition(mm_function(c5), c5.vertices(), Backend::kExact), mm_function(c5)) == 2);
  CHECK(f_width(approx_decomposition(mm_function(c5), c5.vertices(), Backend::kGreedy), mm_function(c5)) >= 2);
  const Graph k6 = complete(6);
  for (auto be : {Backend::kExact, Backend::kGreedy})
    CHECK(f_width(approx_decomposition(sm_function(k6), k6.vertices(), be), sm_function(k6)) == 1);
}

TEST_CASE("greedy never beats exact, and exact mm width is monotone under edge deletion") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 80; ++t) {
    const Graph g = random_connected(4 + rng() % 6, 0.5, rng);
    const auto f = mm_function(g);
    const std::size_t opt = exact_best_decomposition(f).width;
    const auto greedy = approx_decomposition(f, g.vertices(), Backend::kGreedy);
    CHECK(f_width(greedy, f) >= opt);
    std::vector<Edge> fewer = g.edges();
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(rng() % fewer.size()));
    CHECK(exact_best_decomposition(mm_function(Graph(g.vertex_count(), fewer))).width <= opt);
  }
}

TEST_CASE("greedy is deterministic") {
  std::mt19937_64 rng(12);
  const Graph g = random_connected(14, 0.3, rng);
  const auto x = approx_decomposition(mm_function(g), g.vertices(), Backend::kGreedy);
  const auto y = approx_decomposition(mm_function(g), g.vertices(), Backend::kGreedy);
  CHECK(x.edges() == y.edges());
}

TEST_CASE("validate rejects broken trees") {
  BranchDecomposition bd;
  const auto l0 = bd.add_node(0);
  const auto l1 = bd.add_node(1);
  const auto l2 = bd.add_node(1);
  const auto mid = bd.add_node();
  bd.add_edge(l0, mid);
  bd.add_edge(l1, mid);
  bd.add_edge(l2, mid);
  CHECK_THROWS_AS(bd.validate(), InvalidInput);  // label 1 twice

  BranchDecomposition cyc;
  for (Vertex v = 0; v < 3; ++v) cyc.add_node(v);
  cyc.add_edge(0, 1);
  cyc.add_edge(1, 2);
  cyc.add_edge(2, 0);
  CHECK_THROWS_AS(cyc.validate(), InvalidInput);

  BranchDecomposition single = BranchDecomposition::single(4);
  single.validate();
  CHECK(cuts(single).empty());
}
