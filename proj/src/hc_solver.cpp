#include "smw/hc_solver.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "certificate_util.hpp"
#include "smw/cut_functions.hpp"
#include "smw/error.hpp"

namespace smw {

using detail::acyclic;
using detail::degrees;

bool is_hamiltonian_cycle(const Graph& g, const EdgeSet& s) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || s.count() != n) return false;
  const auto deg = degrees(g, s);
  for (auto v : g.vertices())
    if (deg[v] != 2) return false;
  // 2-regular and spanning: a single cycle iff the walk from one vertex takes n steps.
  auto step = [&](Vertex cur, Vertex prev) {
    for (auto w : g.neighbors(cur))
      if (w != prev && s.test(static_cast<std::size_t>(g.edge_index(cur, static_cast<Vertex>(w)))))
        return static_cast<Vertex>(w);
    return cur;
  };
  const Vertex start = static_cast<Vertex>(g.vertices().first());
  Vertex prev = start;
  Vertex cur = step(start, start);
  std::size_t steps = 1;
  while (cur != start && steps <= n) {
    const Vertex next = step(cur, prev);
    prev = cur;
    cur = next;
    ++steps;
  }
  return steps == n;
}

bool is_certificate(const Graph& g, const VertexSet& home, const EdgeSet& s) {
  if (!s.is_subset_of(g.edges_within(home))) return false;
  const auto deg = degrees(g, s);
  for (auto v : home)
    if (deg[v] > 2) return false;
  return acyclic(g, s) || is_hamiltonian_cycle(g, s);
}

bool is_dead(const Graph& g, const VertexSet& home, const EdgeSet& s) {
  if (home == g.vertices()) return !is_hamiltonian_cycle(g, s);
  if (!acyclic(g, s)) return true;
  const auto deg = degrees(g, s);
  std::size_t missing = 0;
  for (auto v : home) {
    if (deg[v] > 2) return true;
    const std::size_t need = 2U - deg[v];
    if (need > (g.neighbors(static_cast<Vertex>(v)) - home).count()) return true;
    missing += need;
  }
  if (missing == 0) return true;
  return missing > 2 * mm_value(g, home);
}

namespace {

using CertSet = std::unordered_set<EdgeSet, BitsHash>;

void conc_rec(const Graph& g, const VertexSet& home, const std::vector<std::size_t>& cross, std::size_t i,
              EdgeSet& cur, detail::DegreeTable& deg, std::vector<Certificate>& out) {
  if (i == cross.size()) {
    if (acyclic(g, cur) || is_hamiltonian_cycle(g, cur)) out.push_back(cur);
    return;
  }
  conc_rec(g, home, cross, i + 1, cur, deg, out);
  const auto& e = g.edge(cross[i]);
  if (deg[e.u] < 2 && deg[e.v] < 2) {
    ++deg[e.u];
    ++deg[e.v];
    cur.set(cross[i]);
    conc_rec(g, home, cross, i + 1, cur, deg, out);
    cur.reset(cross[i]);
    --deg[e.u];
    --deg[e.v];
  }
}

/// Paths of a certificate as (entry, exit) endpoint pairs; isolated
/// vertices give a pair with equal ends. Sorted by first endpoint.
std::vector<std::pair<Vertex, Vertex>> paths_of(const Graph& g, const VertexSet& home, const EdgeSet& s) {
  const auto deg = degrees(g, s);
  std::vector<std::pair<Vertex, Vertex>> out;
  VertexSet done;
  for (auto v0 : home) {
    const auto v = static_cast<Vertex>(v0);
    if (done.test(v) || deg[v] >= 2) continue;
    done.set(v);
    if (deg[v] == 0) {
      out.emplace_back(v, v);
      continue;
    }
    Vertex prev = v;
    Vertex cur = v;
    while (true) {
      Vertex next = cur;
      for (auto w : g.neighbors(cur)) {
        if (w == prev) continue;
        if (s.test(static_cast<std::size_t>(g.edge_index(cur, static_cast<Vertex>(w))))) {
          next = static_cast<Vertex>(w);
          break;
        }
      }
      if (next == cur) break;
      prev = cur;
      cur = next;
    }
    done.set(cur);
    out.emplace_back(v, cur);
  }
  return out;
}

std::size_t missing_degree(const Graph& g, const VertexSet& home, const EdgeSet& s) {
  const auto deg = degrees(g, s);
  std::size_t missing = 0;
  for (auto v : home) missing += deg[v] < 2 ? 2U - deg[v] : 0U;
  return missing;
}

std::vector<Certificate> join_both_splits(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          const Certificate& sa, const Certificate& sb) {
  const VertexSet home = a | b;
  std::vector<Certificate> out;
  auto keep = [&](const EdgeSet& s) {
    if (is_certificate(g, home, s)) out.push_back(s);
  };
  const EdgeSet base = sa | sb;
  if (g.edges_between(a, b).empty()) {
    keep(base);
    return out;
  }
  const auto pa = paths_of(g, a, sa);
  const auto pb = paths_of(g, b, sb);
  const std::size_t ta = pa.size();
  const std::size_t tb = pb.size();

  struct Piece {
    Vertex entry;
    Vertex exit;
  };
  auto link = [&](EdgeSet& s, Vertex u, Vertex v) {
    const int idx = g.edge_index(u, v);
    if (idx < 0 || s.test(static_cast<std::size_t>(idx))) return false;
    s.set(static_cast<std::size_t>(idx));
    return true;
  };
  auto realise = [&](const std::vector<std::vector<Piece>>& chains, bool close) -> std::optional<EdgeSet> {
    EdgeSet s = base;
    for (const auto& chain : chains) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!link(s, chain[i].exit, chain[i + 1].entry)) return std::nullopt;
      if (close && !link(s, chain.back().exit, chain.front().entry)) return std::nullopt;
    }
    return s;
  };
  auto piece_a = [&](std::size_t i) { return Piece{pa[i].first, pa[i].second}; };
  auto piece_b = [&](std::size_t i) { return Piece{pb[i].first, pb[i].second}; };

  // Chains alternate a- and b-paths; only the counts of chains with both
  // ends in a (x), mixed ends (y) and both ends in b (z) matter.
  for (std::size_t y = 0; y <= std::min(ta, tb); ++y) {
    for (std::size_t x = 0; x + y <= ta; ++x) {
      if (x + tb < ta) continue;
      const std::size_t z = x + tb - ta;
      if (y + z > tb) continue;
      if (x + y + z == 0 && ta + tb > 0) continue;
      std::vector<std::vector<Piece>> chains;
      std::size_t ia = 0;
      std::size_t ib = 0;
      for (std::size_t i = 0; i < x; ++i) chains.push_back({piece_a(ia++)});
      for (std::size_t i = 0; i < y; ++i) chains.push_back({piece_a(ia++), piece_b(ib++)});
      for (std::size_t i = 0; i < z; ++i) chains.push_back({piece_b(ib++)});
      // Leftover paths extend the first chain two at a time, keeping its end types.
      while (ia < ta) {
        auto& first = chains.front();
        if (x > 0) {
          first.push_back(piece_b(ib++));
          first.push_back(piece_a(ia++));
        } else {
          first.push_back(piece_a(ia++));
          first.push_back(piece_b(ib++));
        }
      }
      if (auto s = realise(chains, false)) keep(*s);
    }
  }
  // Closing one alternating chain gives a Hamiltonian cycle when nothing is left outside.
  if (home == g.vertices() && ta == tb && ta >= 1) {
    std::vector<Piece> chain;
    for (std::size_t i = 0; i < ta; ++i) {
      chain.push_back(piece_a(i));
      chain.push_back(piece_b(i));
    }
    if (auto s = realise({chain}, true)) keep(*s);
  }
  return out;
}

}  // namespace

std::vector<Certificate> conc(const Graph& g, const VertexSet& a, const VertexSet& b, const Certificate& sa,
                              const Certificate& sb) {
  if (a.intersects(b)) throw InvalidInput("conc requires disjoint homes");
  const VertexSet home = a | b;
  EdgeSet cur = sa | sb;
  std::vector<Certificate> out;
  const auto deg0 = degrees(g, cur);
  for (auto v : home)
    if (deg0[v] > 2) return out;
  if (!acyclic(g, cur) && !is_hamiltonian_cycle(g, cur)) return out;
  std::vector<std::size_t> cross;
  for (auto i : g.edges_between(a, b)) cross.push_back(i);
  auto deg = deg0;
  conc_rec(g, home, cross, 0, cur, deg, out);
  return out;
}

std::vector<Certificate> trim_split(const Graph& g, const VertexSet& a, const std::vector<Certificate>& fam) {
  if (!is_split_unchecked(g, a)) throw InvalidInput("trim_split requires a split side");
  std::map<std::size_t, Certificate> best;
  for (const auto& s : fam) {
    if (is_dead(g, a, s)) continue;
    // Every live path ends in the frontier, whose vertices are twins outside a.
    const std::size_t paths = missing_degree(g, a, s) / 2;
    auto [it, inserted] = best.emplace(paths, s);
    if (!inserted && s < it->second) it->second = s;
  }
  std::vector<Certificate> out;
  for (const auto& [k, s] : best) out.push_back(s);
  return out;
}

std::vector<Certificate> trim_vc(const Graph& g, const VertexSet& a, const std::vector<Certificate>& fam,
                                 const RepContext& ctx) {
  if (fam.size() <= 1) return fam;
  const VertexSet cover = pad_separator(g, a, cut_vertex_cover(g, a));
  const EdgeSet estar = g.edges_between(a, cover - a);
  // Cover inside a: it already separates a \ cover from the rest.
  if (estar.empty()) return trim_separator(g, a, cover, fam, ctx);
  const auto ext = preserving_extension(g, a, cover, fam, estar, ctx);
  CertSet stripped;
  for (const auto& s : ext) stripped.insert(s - estar);
  std::vector<Certificate> out;
  for (const auto& s : fam)
    if (stripped.erase(s) > 0) out.push_back(s);
  return out;
}

std::vector<Certificate> trim(const Graph& g, const VertexSet& a, const std::vector<Certificate>& fam,
                              const RepContext& ctx) {
  std::vector<Certificate> live;
  for (const auto& s : fam)
    if (!is_dead(g, a, s)) live.push_back(s);
  if (live.size() <= 1 || a == g.vertices()) return live;
  if (is_split_unchecked(g, a)) return trim_split(g, a, live);
  return trim_vc(g, a, live, ctx);
}

std::vector<Certificate> join(const Graph& g, const VertexSet& a, const VertexSet& b, const Certificate& sa,
                              const Certificate& sb, const RepContext& ctx) {
  if (a.intersects(b)) throw InvalidInput("join requires disjoint homes");
  const VertexSet home = a | b;
  const VertexSet w = g.vertices() - home;
  if (is_dead(g, a, sa) || is_dead(g, b, sb)) return {};
  const bool split_a = is_split_unchecked(g, a);
  const bool split_b = is_split_unchecked(g, b);
  if (split_a && split_b) return join_both_splits(g, a, b, sa, sb);

  // P takes the preserving extension; Q keeps its certificate as is.
  const bool swap = split_a;
  const VertexSet& p = swap ? b : a;
  const VertexSet& q = swap ? a : b;
  const Certificate& sp = swap ? sb : sa;
  const Certificate& sq = swap ? sa : sb;

  VertexSet xq;
  if (swap ? split_a : split_b) {
    // Twin path ends: only as many q-paths as p has missing degree can meet p.
    const auto paths = paths_of(g, q, sq);
    const std::size_t m = std::min(paths.size(), missing_degree(g, p, sp));
    for (std::size_t i = 0; i < m; ++i) {
      xq.set(paths[i].first);
      xq.set(paths[i].second);
    }
  } else {
    const auto deg = degrees(g, sq);
    for (auto v : q)
      if (deg[v] < 2) xq.set(v);
  }
  const VertexSet cover = pad_separator(g, p, cut_vertex_cover(g, p) | xq);
  const EdgeSet estar = g.edges_between(p, cover - p);
  const auto ext = preserving_extension(g, p, cover, {sp}, estar, ctx);
  const EdgeSet to_w = g.edges_between(p, w);
  std::vector<Certificate> out;
  CertSet seen;
  for (const auto& e : ext) {
    const EdgeSet s = (e - to_w) | sq;
    if (!is_certificate(g, home, s)) continue;
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

HcResult solve_hc(const Graph& g, const BranchDecomposition& bd, const SolveOptions& opts) {
  HcResult result;
  if (g.vertex_count() <= 2 || !g.is_connected()) return result;
  bd.validate();
  if (bd.elements() != g.vertices()) throw InvalidInput("decomposition does not cover the graph");
  const RepContext ctx{opts.seed, opts.rep_observer};

  // Root on a subdivision of the first tree edge.
  const auto [ra, rb] = bd.edges().front();
  const std::size_t nodes = bd.node_count();
  std::vector<std::size_t> parent(nodes, nodes);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{ra, rb};
  parent[ra] = rb;
  parent[rb] = ra;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (auto y : bd.neighbors(x))
      if (y != parent[x]) {
        parent[y] = x;
        stack.push_back(y);
      }
  }

  std::vector<CertificateFamily> fam(nodes);
  auto trace_trim = [&](const VertexSet& home, const std::vector<Certificate>& in,
                        const std::vector<Certificate>& out) {
    if (opts.trace) opts.trace({TraceEvent::Kind::kTrim, home, {}, {}, &in, &out});
  };
  auto combine_children = [&](const VertexSet& ha, const std::vector<Certificate>& fa, const VertexSet& hb,
                              const std::vector<Certificate>& fb, bool is_root) {
    const VertexSet home = ha | hb;
    std::vector<Certificate> acc;
    CertSet seen;
    std::size_t last_trim = 64;
    for (const auto& sa : fa) {
      for (const auto& sb : fb) {
        const auto part = opts.trimming ? join(g, ha, hb, sa, sb, ctx) : conc(g, ha, hb, sa, sb);
        if (opts.trace) {
          const std::vector<Certificate> in{sa, sb};
          opts.trace({TraceEvent::Kind::kJoin, home, ha, hb, &in, &part});
        }
        for (const auto& s : part) {
          if (!seen.insert(s).second) continue;
          acc.push_back(s);
          if (is_root && is_hamiltonian_cycle(g, s)) return acc;
        }
        // Keep the working set near its trimmed size between pairs.
        if (opts.trimming && !is_root && acc.size() > 2 * last_trim) {
          auto trimmed = trim(g, home, acc, ctx);
          trace_trim(home, acc, trimmed);
          acc = std::move(trimmed);
          seen = CertSet(acc.begin(), acc.end());
          last_trim = std::max<std::size_t>(64, acc.size());
        }
      }
    }
    return acc;
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto x = *it;
    if (bd.label(x)) {
      fam[x] = {VertexSet::single(*bd.label(x)), {EdgeSet{}}};
      continue;
    }
    std::vector<std::size_t> kids;
    for (auto y : bd.neighbors(x))
      if (y != parent[x]) kids.push_back(y);
    const VertexSet home = fam[kids[0]].home | fam[kids[1]].home;
    auto acc = combine_children(fam[kids[0]].home, fam[kids[0]].members, fam[kids[1]].home, fam[kids[1]].members,
                                false);
    NodeStat st{home, acc.size(), acc.size(), cut_vertex_cover(g, home).count()};
    if (opts.trimming) {
      auto trimmed = trim(g, home, acc, ctx);
      trace_trim(home, acc, trimmed);
      acc = std::move(trimmed);
    }
    st.after_trim = acc.size();
    result.max_family = std::max(result.max_family, acc.size());
    result.nodes.push_back(st);
    fam[x] = {home, std::move(acc)};
    for (auto y : kids) fam[y] = {};
  }

  const auto root = combine_children(fam[ra].home, fam[ra].members, fam[rb].home, fam[rb].members, true);
  result.nodes.push_back({g.vertices(), root.size(), root.size(), 0});
  for (const auto& s : root) {
    if (is_hamiltonian_cycle(g, s)) {
      result.hamiltonian = true;
      result.witness = s;
      break;
    }
  }
  return result;
}

}  // namespace smw
