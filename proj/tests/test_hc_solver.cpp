#include <doctest.h>

#include <set>

#include "smw/cut_functions.hpp"
#include "smw/error.hpp"
#include "smw/hc_solver.hpp"
#include "smw/oracles.hpp"
#include "smw/sm_pipeline.hpp"
#include "support.hpp"

using namespace smw;
using namespace smw::test;

namespace {

std::vector<EdgeSet> subsets_of(const EdgeSet& ground) {
  const std::vector<std::size_t> el(ground.begin(), ground.end());
  std::vector<EdgeSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << el.size()); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < el.size(); ++i)
      if ((mask >> i) & 1U) s.set(el[i]);
    out.push_back(s);
  }
  return out;
}

std::vector<Certificate> certificates_of(const Graph& g, const VertexSet& home) {
  std::vector<Certificate> out;
  for (const auto& s : subsets_of(g.edges_within(home)))
    if (is_certificate(g, home, s)) out.push_back(s);
  return out;
}

std::set<EdgeSet> as_set(const std::vector<Certificate>& v) { return {v.begin(), v.end()}; }

std::size_t pow6(std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= 6;
  return r;
}

}  // namespace

TEST_CASE("Hamiltonian cycle and certificate predicates") {
  const Graph c6 = cycle(6);
  CHECK(is_hamiltonian_cycle(c6, c6.all_edges()));
  CHECK_FALSE(is_hamiltonian_cycle(c6, c6.all_edges() - EdgeSet::single(0)));
  CHECK(is_certificate(c6, c6.vertices(), c6.all_edges()));
  CHECK(is_certificate(c6, vs({0, 1, 2}), c6.edge_set({Edge(0, 1), Edge(1, 2)})));
  CHECK_FALSE(is_certificate(c6, vs({0, 1}), c6.edge_set({Edge(1, 2)})));
  const Graph k4 = complete(4);
  CHECK_FALSE(is_certificate(k4, vs({0, 1, 2}), k4.edge_set({Edge(0, 1), Edge(1, 2), Edge(0, 2)})));
  CHECK_FALSE(is_certificate(star(3), star(3).vertices(), star(3).all_edges()));
}

TEST_CASE("conc on tiny homes") {
  const Graph k2 = path(2);
  CHECK(as_set(conc(k2, vs({0}), vs({1}), {}, {})) == std::set<EdgeSet>{EdgeSet{}, EdgeSet::single(0)});
  const Graph two(4, {Edge(0, 1), Edge(2, 3)});
  CHECK(conc(two, vs({0, 1}), vs({2, 3}), EdgeSet::single(0), EdgeSet::single(1)) ==
        std::vector<Certificate>{two.all_edges()});
  CHECK_THROWS_AS((void)conc(k2, vs({0, 1}), vs({1}), {}, {}), InvalidInput);
}

TEST_CASE("conc equals subset enumeration") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 120; ++t) {
    const Graph g = random_connected(3 + rng() % 5, 0.55, rng);
    const VertexSet a = random_subset(g.vertices(), rng);
    const VertexSet b = random_subset(g.vertices() - a, rng);
    if (a.empty() || b.empty()) continue;
    const auto ca = certificates_of(g, a);
    const auto cb = certificates_of(g, b);
    const Certificate sa = ca[rng() % ca.size()];
    const Certificate sb = cb[rng() % cb.size()];
    std::set<EdgeSet> expected;
    for (const auto& e : subsets_of(g.edges_between(a, b)))
      if (is_certificate(g, a | b, sa | sb | e)) expected.insert(sa | sb | e);
    CHECK(as_set(conc(g, a, b, sa, sb)) == expected);
  }
}

TEST_CASE("singleton families are left alone") {
  const Graph c6 = cycle(6);
  const std::vector<Certificate> one{c6.edge_set({Edge(0, 1)})};
  CHECK(trim_vc(c6, vs({0, 1}), one) == one);
  CHECK(trim_split(cycle(4), vs({0, 2}), {EdgeSet{}}) == std::vector<Certificate>{EdgeSet{}});
}

TEST_CASE("trim_split merges twins and rejects non-splits") {
  // Twins x1, x2, x3 = 0, 1, 2 see z1 = 4, z2 = 5; y = 3 hangs off all three.
  const Graph g = from_pairs(6, {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}});
  const VertexSet a = vs({0, 1, 2, 3});
  REQUIRE(is_split(g, a));
  const std::vector<Certificate> fam{g.edge_set({Edge(0, 3), Edge(1, 3)}), g.edge_set({Edge(0, 3), Edge(2, 3)})};
  for (const auto& s : fam) REQUIRE_FALSE(is_dead(g, a, s));
  const auto kept = trim_split(g, a, fam);
  CHECK(kept.size() == 1);
  CHECK(verify_preservation(g, a, fam, kept));
  CHECK_THROWS_AS((void)trim_split(cycle(5), vs({0, 1}), fam), InvalidInput);
}

TEST_CASE("trims preserve on every side of small graphs") {
  std::mt19937_64 rng(55);
  std::size_t splits = 0, others = 0;
  for (int t = 0; t < 120; ++t) {
    const Graph g = random_connected(4 + rng() % 4, 0.5, rng);
    const std::size_t n = g.vertex_count();
    const auto cycles = all_hamiltonian_cycles(g);
    for (const auto& a : subsets_of(EdgeSet::prefix(n))) {
      VertexSet home;
      for (auto v : a) home.set(v);
      if (home.count() < 2 || home.count() + 1 > n || rng() % 4 != 0) continue;
      const auto fam = certificates_of(g, home);
      std::vector<Certificate> live;
      for (const auto& s : fam)
        if (!is_dead(g, home, s)) live.push_back(s);
      const auto kept = trim(g, home, fam);
      std::set<EdgeSet> big(fam.begin(), fam.end());
      CHECK(verify_preservation(g, home, [&](const EdgeSet& s) { return big.count(s) > 0; }, kept, cycles));
      for (const auto& s : kept) CHECK(big.count(s) == 1);
      if (is_split(g, home)) {
        ++splits;
        CHECK(kept == trim_split(g, home, live));
        CHECK(kept.size() <= (n + 1) * (n + 1) * (n + 1));
      } else {
        ++others;
        CHECK(kept == trim_vc(g, home, live));
        CHECK(kept.size() <= pow6(std::max<std::size_t>(3, mm_value(g, home))));
      }
    }
  }
  CHECK(splits > 20);
  CHECK(others > 200);
}

TEST_CASE("preservation checked two ways agree on trims") {
  std::mt19937_64 rng(66);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected(5 + rng() % 2, 0.5, rng);
    const VertexSet home = random_subset(g.vertices(), rng);
    if (home.count() < 2 || home.count() + 2 > g.vertex_count()) continue;
    const auto fam = certificates_of(g, home);
    const auto kept = trim(g, home, fam);
    CHECK(verify_preservation(g, home, fam, kept) == verify_preservation_direct(g, home, fam, kept));
    CHECK(verify_preservation_direct(g, home, fam, kept));
  }
}

TEST_CASE("join on singleton homes equals conc") {
  const Graph c5 = cycle(5);
  CHECK(as_set(join(c5, vs({0}), vs({1}), {}, {})) == as_set(conc(c5, vs({0}), vs({1}), {}, {})));
}

TEST_CASE("join keeps completions of conc") {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    const Graph g = random_connected(4 + rng() % 5, 0.5, rng);
    VertexSet a, b;
    for (auto v : g.vertices()) {
      const auto r = rng() % 3;
      if (r == 0) a.set(v);
      if (r == 1) b.set(v);
    }
    if (a.empty() || b.empty()) continue;
    const auto ca = certificates_of(g, a);
    const auto cb = certificates_of(g, b);
    const Certificate sa = ca[rng() % ca.size()];
    const Certificate sb = cb[rng() % cb.size()];
    const auto full = conc(g, a, b, sa, sb);
    const auto part = join(g, a, b, sa, sb);
    const auto fs = as_set(full);
    for (const auto& s : part) CHECK(fs.count(s) == 1);
    CHECK(verify_preservation(g, a | b, full, part));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("solver on named graphs") {
  const Graph c6 = cycle(6);
  for (const auto& bd : {caterpillar(c6.vertices()), approx_sm_decomposition(c6)}) {
    const auto r = solve_hc(c6, bd);
    CHECK(r.hamiltonian);
    REQUIRE(r.witness);
    CHECK(*r.witness == c6.all_edges());
  }
  CHECK_FALSE(solve_hc(path(4), approx_sm_decomposition(path(4))).hamiltonian);
  CHECK_FALSE(solve_hc(petersen(), approx_sm_decomposition(petersen())).hamiltonian);
  CHECK_FALSE(solve_hc(path(2), caterpillar(path(2).vertices())).hamiltonian);
  const Graph split(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  CHECK_FALSE(solve_hc(split, caterpillar(split.vertices())).hamiltonian);
  CHECK_THROWS_AS((void)solve_hc(c6, caterpillar(vs({0, 1, 2}))), InvalidInput);
}

TEST_CASE("solver agrees with and without trimming and with Held-Karp") {
  std::mt19937_64 rng(88);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_connected(3 + rng() % 5, 0.3 + 0.1 * static_cast<double>(rng() % 6), rng);
    const auto bd = approx_sm_decomposition(g);
    SolveOptions plain;
    plain.trimming = false;
    const auto r = solve_hc(g, bd);
    const bool truth = brute_hc(g).hamiltonian;
    CHECK(r.hamiltonian == truth);
    CHECK(solve_hc(g, bd, plain).hamiltonian == truth);
    if (r.hamiltonian) CHECK(is_hamiltonian_cycle(g, *r.witness));
  }
}

TEST_CASE("stored families hold certificates and respect the size bound") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected(5 + rng() % 4, 0.5, rng);
    const std::size_t n = g.vertex_count();
    SolveOptions opts;
    opts.trace = [&](const TraceEvent& e) {
      if (e.kind != TraceEvent::Kind::kTrim) return;
      for (const auto& s : *e.output) CHECK(is_certificate(g, e.home, s));
    };
    const auto r = solve_hc(g, approx_sm_decomposition(g), opts);
    for (const auto& st : r.nodes)
      if (st.home != g.vertices())
        CHECK(st.after_trim <= pow6(std::max<std::size_t>(3, st.cover)) + (n + 1) * (n + 1) * (n + 1));
  }
}

TEST_CASE("solver output does not depend on the decomposition") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected(6 + rng() % 3, 0.45, rng);
    const bool truth = brute_hc(g).hamiltonian;
    CHECK(solve_hc(g, caterpillar(g.vertices())).hamiltonian == truth);
    CHECK(solve_hc(g, approx_decomposition(mm_function(g), g.vertices(), Backend::kGreedy)).hamiltonian == truth);
  }
}
