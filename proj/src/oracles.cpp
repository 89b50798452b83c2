#include "smw/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "smw/branch_decomposition.hpp"
#include "smw/cut_functions.hpp"
#include "smw/error.hpp"
#include "smw/hc_solver.hpp"

namespace smw {

namespace {

void refuse_above(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit)
    throw Refused(std::string(what) + " refused: " + std::to_string(g.vertex_count()) + " vertices exceed limit " +
                  std::to_string(limit));
}

std::vector<Vertex> ids(const Graph& g) {
  std::vector<Vertex> out;
  for (auto v : g.vertices()) out.push_back(static_cast<Vertex>(v));
  return out;
}

EdgeSet cycle_edges(const Graph& g, const std::vector<Vertex>& tour) {
  EdgeSet s;
  for (std::size_t i = 0; i < tour.size(); ++i)
    s.set(static_cast<std::size_t>(g.edge_index(tour[i], tour[(i + 1) % tour.size()])));
  return s;
}

}  // namespace

BruteHc brute_hc(const Graph& g, std::size_t limit) {
  refuse_above(g, limit, "brute_hc");
  const auto v = ids(g);
  const std::size_t n = v.size();
  if (n < 3) return {};
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(v[i], v[j])) adj[i] |= 1U << j;
  // reach[mask]: ends j of paths from 0 through exactly mask (0 and j in mask).
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!((ends >> j) & 1U)) continue;
      std::uint32_t nxt = adj[j] & ~mask;
      while (nxt) {
        const int k = __builtin_ctz(nxt);
        nxt &= nxt - 1;
        reach[mask | (1U << k)] |= 1U << k;
      }
    }
  }
  const std::uint32_t closing = reach[full] & adj[0] & ~1U;
  if (closing == 0) return {};
  // Walk back from an end adjacent to 0.
  std::vector<Vertex> tour;
  std::uint32_t mask = full;
  std::size_t cur = static_cast<std::size_t>(__builtin_ctz(closing));
  while (cur != 0) {
    tour.push_back(v[cur]);
    const std::uint32_t prev_mask = mask & ~(1U << cur);
    std::size_t prev = n;
    for (std::size_t j = 0; j < n; ++j)
      if (((reach[prev_mask] >> j) & 1U) && ((adj[j] >> cur) & 1U)) {
        prev = j;
        break;
      }
    mask = prev_mask;
    cur = prev;
  }
  tour.push_back(v[0]);
  std::reverse(tour.begin(), tour.end());
  return {true, cycle_edges(g, tour)};
}

BruteHc brute_hc_backtrack(const Graph& g, std::size_t limit) {
  refuse_above(g, limit, "brute_hc_backtrack");
  const std::size_t n = g.vertex_count();
  if (n < 3) return {};
  const Vertex start = static_cast<Vertex>(g.vertices().first());
  std::vector<Vertex> path{start};
  VertexSet used = VertexSet::single(start);
  std::function<bool()> extend = [&]() -> bool {
    const Vertex last = path.back();
    if (path.size() == n) return g.has_edge(last, start);
    for (auto w : g.neighbors(last) - used) {
      path.push_back(static_cast<Vertex>(w));
      used.set(w);
      if (extend()) return true;
      used.reset(w);
      path.pop_back();
    }
    return false;
  };
  if (!extend()) return {};
  return {true, cycle_edges(g, path)};
}

std::vector<EdgeSet> all_hamiltonian_cycles(const Graph& g, std::size_t limit) {
  refuse_above(g, limit, "cycle enumeration");
  std::vector<EdgeSet> out;
  const std::size_t n = g.vertex_count();
  if (n < 3) return out;
  const Vertex start = static_cast<Vertex>(g.vertices().first());
  std::vector<Vertex> path{start};
  VertexSet used = VertexSet::single(start);
  std::function<void()> extend = [&]() {
    const Vertex last = path.back();
    if (path.size() == n) {
      // Each cycle is found in both directions; keep one.
      if (g.has_edge(last, start) && path[1] < last) out.push_back(cycle_edges(g, path));
      return;
    }
    for (auto w : g.neighbors(last) - used) {
      path.push_back(static_cast<Vertex>(w));
      used.set(w);
      extend();
      used.reset(w);
      path.pop_back();
    }
  };
  extend();
  return out;
}

bool is_prime_exhaustive(const Graph& g, std::size_t limit) {
  refuse_above(g, limit, "primality scan");
  const auto v = ids(g);
  const std::size_t n = v.size();
  if (n < 4) return true;
  // Subsets containing v[0] cover every bipartition once.
  for (std::uint32_t mask = 1; mask < (1U << n) - 1; mask += 2) {
    VertexSet a;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) a.set(v[i]);
    if (is_split_unchecked(g, a)) return false;
  }
  return true;
}

std::size_t brute_sm_width(const Graph& g, std::size_t limit) {
  refuse_above(g, limit, "brute_sm_width");
  return exact_best_decomposition(sm_function(g), limit).width;
}

std::size_t brute_mm_width(const Graph& g, std::size_t limit) {
  refuse_above(g, limit, "brute_mm_width");
  return exact_best_decomposition(mm_function(g), limit).width;
}

bool verify_preservation(const Graph& g, const VertexSet& a, const std::function<bool(const EdgeSet&)>& in_big,
                         const std::vector<EdgeSet>& small, const std::vector<EdgeSet>& cycles) {
  const EdgeSet inside = g.edges_within(a);
  const EdgeSet outside = g.edges_within(g.vertices() - a);
  const std::unordered_set<EdgeSet, BitsHash> small_set(small.begin(), small.end());
  // Outer parts completed by a small member.
  std::unordered_set<EdgeSet, BitsHash> served;
  for (const auto& h : cycles)
    if (small_set.count(h & inside)) served.insert(h & outside);
  for (const auto& h : cycles)
    if (in_big(h & inside) && !served.count(h & outside)) return false;
  return true;
}

bool verify_preservation(const Graph& g, const VertexSet& a, const std::vector<EdgeSet>& big,
                         const std::vector<EdgeSet>& small, std::size_t limit) {
  refuse_above(g, limit, "verify_preservation");
  const std::unordered_set<EdgeSet, BitsHash> big_set(big.begin(), big.end());
  return verify_preservation(
      g, a, [&](const EdgeSet& s) { return big_set.count(s) > 0; }, small, all_hamiltonian_cycles(g, limit));
}

bool verify_preservation_direct(const Graph& g, const VertexSet& a, const std::vector<EdgeSet>& big,
                                const std::vector<EdgeSet>& small, std::size_t limit) {
  refuse_above(g, limit, "verify_preservation_direct");
  const VertexSet rest = g.vertices() - a;
  std::vector<std::size_t> outer;
  for (auto i : g.edges_within(rest)) outer.push_back(i);
  auto has_witness = [&](const std::vector<EdgeSet>& fam, const EdgeSet& b) {
    for (const auto& s : fam)
      for (const auto& c : conc(g, a, rest, s, b))
        if (is_hamiltonian_cycle(g, c)) return true;
    return false;
  };
  bool ok = true;
  EdgeSet b;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!ok) return;
    if (i == outer.size()) {
      if (!is_certificate(g, rest, b)) return;
      if (has_witness(big, b) && !has_witness(small, b)) ok = false;
      return;
    }
    walk(i + 1);
    b.set(outer[i]);
    walk(i + 1);
    b.reset(outer[i]);
  };
  walk(0);
  return ok;
}

bool verify_extension(const Graph& g, const VertexSet& a, const std::vector<EdgeSet>& fam,
                      const std::vector<EdgeSet>& ext, const EdgeSet& estar, const std::vector<EdgeSet>& cycles) {
  const EdgeSet inside = g.edges_within(a);
  const std::unordered_set<EdgeSet, BitsHash> fam_set(fam.begin(), fam.end());
  for (const auto& h : cycles) {
    if (!fam_set.count(h & inside)) continue;
    const EdgeSet y = h - inside - estar;
    bool found = false;
    for (const auto& c : ext)
      if (is_hamiltonian_cycle(g, c | y)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace smw
