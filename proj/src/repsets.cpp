#include "smw/repsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>

#include "certificate_util.hpp"
#include "smw/error.hpp"

namespace smw {

namespace field {

std::uint64_t inv(std::uint64_t a) {
  if (a % kPrime == 0) throw InvalidInput("zero has no inverse");
  std::uint64_t result = 1;
  std::uint64_t base = a % kPrime;
  for (std::uint64_t e = kPrime - 2; e > 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

}  // namespace field

namespace {

using Column = std::vector<std::pair<std::size_t, std::uint64_t>>;
/// Coordinates of an exterior-power vector keyed by row subsets, sorted by key.
using Sparse = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Sparse wedge_with(const Sparse& cur, const Column& col) {
  std::unordered_map<std::uint64_t, std::uint64_t> acc;
  for (const auto& [set, coef] : cur) {
    for (const auto& [row, val] : col) {
      const std::uint64_t bit = 1ULL << row;
      if (set & bit) continue;
      // Moving e_row past the larger indices of set.
      const int above = std::popcount(row + 1 >= 64 ? 0ULL : (set >> (row + 1)));
      std::uint64_t term = field::mul(coef, val);
      if (above & 1) term = field::sub(0, term);
      auto& slot = acc[set | bit];
      slot = field::add(slot, term);
    }
  }
  Sparse out;
  out.reserve(acc.size());
  for (const auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Row echelon form with each stored row normalised to leading coefficient 1.
class Echelon {
 public:
  /// Adds v if independent of the rows so far; returns whether it was added.
  bool insert(Sparse v) {
    while (!v.empty()) {
      const auto lead = v.front().first;
      const auto it = pivot_.find(lead);
      if (it == pivot_.end()) {
        const auto scale = field::inv(v.front().second);
        for (auto& [k, x] : v) x = field::mul(x, scale);
        pivot_.emplace(lead, rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      v = subtract(v, rows_[it->second], v.front().second);
    }
    return false;
  }

 private:
  static Sparse subtract(const Sparse& v, const Sparse& row, std::uint64_t factor) {
    Sparse out;
    out.reserve(v.size() + row.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < v.size() || j < row.size()) {
      if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || row[j].first < v[i].first) {
        out.emplace_back(row[j].first, field::sub(0, field::mul(factor, row[j].second)));
        ++j;
      } else {
        const auto x = field::sub(v[i].second, field::mul(factor, row[j].second));
        if (x != 0) out.emplace_back(v[i].first, x);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::unordered_map<std::uint64_t, std::size_t> pivot_;
  std::vector<Sparse> rows_;
};

using detail::acyclic;
using detail::degrees;

/// Indices of fam (in order) kept by the forest representation.
std::vector<std::size_t> representative_forest_indices(const Graph& host, const EdgeSetFamily& fam, std::size_t p,
                                                       std::size_t q, std::uint64_t seed, std::size_t* dropped) {
  for (const auto& x : fam)
    if (x.count() != p) throw InvalidInput("family member of size " + std::to_string(x.count()) + ", expected " +
                                           std::to_string(p));
  const MatroidRep rep(host);
  std::vector<std::size_t> kept;
  std::size_t lost = 0;
  const std::size_t r = rep.rank();
  if (p + q > r) {
    // No forest has p + q edges.
    for (const auto& x : fam)
      if (!acyclic(host, x)) ++lost;
    if (dropped) *dropped = lost;
    return kept;
  }
  const std::size_t dim = p + q;
  if (dim > 63) throw Refused("representative sets limited to rank 63");

  std::vector<Column> columns(host.edge_count());
  if (dim == r) {
    for (std::size_t i = 0; i < host.edge_count(); ++i) columns[i] = rep.column(i);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coef(1, field::kPrime - 1);
    std::vector<std::vector<std::uint64_t>> proj(dim, std::vector<std::uint64_t>(r));
    for (auto& row : proj)
      for (auto& x : row) x = coef(rng);
    for (std::size_t i = 0; i < host.edge_count(); ++i) {
      for (std::size_t d = 0; d < dim; ++d) {
        std::uint64_t s = 0;
        for (const auto& [row, val] : rep.column(i)) s = field::add(s, field::mul(proj[d][row], val));
        if (s != 0) columns[i].emplace_back(d, s);
      }
    }
  }

  Echelon basis;
  for (std::size_t m = 0; m < fam.size(); ++m) {
    Sparse v{{0, 1}};
    for (auto i : fam[m]) {
      v = wedge_with(v, columns[i]);
      if (v.empty()) break;
    }
    if (v.empty()) {
      if (!acyclic(host, fam[m])) ++lost;
      continue;
    }
    if (basis.insert(std::move(v))) kept.push_back(m);
  }
  if (dropped) *dropped = lost;
  return kept;
}

std::optional<EdgeSet> torso_in(const Graph& g, const EdgeSet& x, const VertexSet& c, const Graph& kc) {
  // Up to two incident x-edges per vertex.
  std::array<std::array<int, 2>, kMaxVertexId> inc{};
  std::array<std::uint8_t, kMaxVertexId> deg{};
  for (auto i : x) {
    const auto& e = g.edge(i);
    for (auto v : {e.u, e.v}) {
      if (deg[v] == 2) return std::nullopt;
      inc[v][deg[v]++] = static_cast<int>(i);
    }
  }
  EdgeSet visited;
  EdgeSet out;
  for (auto u0 : c) {
    const auto u = static_cast<Vertex>(u0);
    for (std::uint8_t slot = 0; slot < deg[u]; ++slot) {
      int e = inc[u][slot];
      if (visited.test(static_cast<std::size_t>(e))) continue;
      Vertex cur = g.edge(static_cast<std::size_t>(e)).other(u);
      visited.set(static_cast<std::size_t>(e));
      while (!c.test(cur)) {
        if (deg[cur] != 2) return std::nullopt;
        e = inc[cur][0] == e ? inc[cur][1] : inc[cur][0];
        if (visited.test(static_cast<std::size_t>(e))) return std::nullopt;
        visited.set(static_cast<std::size_t>(e));
        cur = g.edge(static_cast<std::size_t>(e)).other(cur);
      }
      if (cur == u) return std::nullopt;
      const int t = kc.edge_index(u, cur);
      if (out.test(static_cast<std::size_t>(t))) return std::nullopt;
      out.set(static_cast<std::size_t>(t));
    }
  }
  if (visited != x) return std::nullopt;
  return out;
}

}  // namespace

MatroidRep::MatroidRep(const Graph& host) : columns_(host.edge_count()) {
  std::vector<int> row(host.id_bound(), -1);
  VertexSet seen;
  std::size_t next = 0;
  for (auto root : host.vertices()) {
    if (seen.test(root)) continue;
    // The root of each component is the dropped row.
    VertexSet comp = VertexSet::single(root);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet grow;
      for (auto v : frontier) grow |= host.neighbors(static_cast<Vertex>(v));
      grow -= comp;
      comp |= grow;
      frontier = grow;
    }
    seen |= comp;
    for (auto v : comp)
      if (v != root) row[v] = 0;
  }
  for (auto v : host.vertices())
    if (row[v] == 0) row[v] = static_cast<int>(next++);
  rank_ = next;
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    const auto& e = host.edge(i);
    if (row[e.u] >= 0) columns_[i].emplace_back(static_cast<std::size_t>(row[e.u]), 1);
    if (row[e.v] >= 0) columns_[i].emplace_back(static_cast<std::size_t>(row[e.v]), field::kPrime - 1);
    std::sort(columns_[i].begin(), columns_[i].end());
  }
}

bool MatroidRep::independent(const EdgeSet& s) const {
  // Dense elimination over the field.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> lead;
  for (auto i : s) {
    std::vector<std::uint64_t> v(rank_, 0);
    for (const auto& [r, x] : columns_[i]) v[r] = x;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto f = v[lead[b]];
      if (f == 0) continue;
      for (std::size_t r = 0; r < rank_; ++r) v[r] = field::sub(v[r], field::mul(f, basis[b][r]));
    }
    std::size_t l = rank_;
    for (std::size_t r = 0; r < rank_; ++r)
      if (v[r] != 0) {
        l = r;
        break;
      }
    if (l == rank_) return false;
    const auto scale = field::inv(v[l]);
    for (auto& x : v) x = field::mul(x, scale);
    basis.push_back(std::move(v));
    lead.push_back(l);
  }
  return true;
}

EdgeSetFamily representative_forests(const Graph& host, const EdgeSetFamily& fam, std::size_t p, std::size_t q,
                                     std::uint64_t seed, std::size_t* dropped) {
  EdgeSetFamily out;
  for (auto i : representative_forest_indices(host, fam, p, q, seed, dropped)) out.push_back(fam[i]);
  return out;
}

std::optional<DegreeSignature> degree_signature(const Graph& host, const EdgeSet& x, const VertexSet& universe) {
  const auto deg = degrees(host, x);
  DegreeSignature sig;
  for (auto v : universe) {
    switch (deg[v]) {
      case 0:
        sig.d0.set(v);
        break;
      case 1:
        sig.d1.set(v);
        break;
      case 2:
        sig.d2.set(v);
        break;
      default:
        return std::nullopt;
    }
  }
  return sig;
}

HcSetsResult representative_hc_sets_detailed(const Graph& gc, const EdgeSetFamily& fam, const RepContext& ctx) {
  HcSetsResult result;
  const std::size_t k = gc.vertex_count();
  std::map<DegreeSignature, std::vector<std::size_t>> buckets;
  std::optional<std::size_t> cycle_member;
  for (std::size_t m = 0; m < fam.size(); ++m) {
    const auto sig = degree_signature(gc, fam[m], gc.vertices());
    if (!sig) {
      ++result.dropped;
      continue;
    }
    if (!acyclic(gc, fam[m])) {
      // A Hamiltonian cycle of gc completes only the empty set; one suffices.
      const bool hamiltonian = sig->d2 == gc.vertices() && fam[m].count() == k &&
                               induced_subgraph(Graph(gc.vertices(), gc.edge_list(fam[m])), gc.vertices())
                                   .is_connected();
      if (hamiltonian && !cycle_member) {
        cycle_member = m;
      } else {
        ++result.dropped;
      }
      continue;
    }
    buckets[*sig].push_back(m);
  }
  std::vector<std::size_t> chosen;
  if (cycle_member) {
    chosen.push_back(*cycle_member);
    BucketStat st;
    st.signature.d2 = gc.vertices();
    st.edges = k;
    st.input = 1;
    st.output = 1;
    result.buckets.push_back(st);
  }
  for (const auto& [sig, members] : buckets) {
    const std::size_t p = fam[members.front()].count();
    const std::size_t q = k - p - 1;
    EdgeSetFamily sub;
    sub.reserve(members.size());
    for (auto m : members) sub.push_back(fam[m]);
    const auto keep = representative_forest_indices(gc, sub, p, q, ctx.seed, nullptr);
    for (auto i : keep) chosen.push_back(members[i]);
    result.buckets.push_back({sig, p, members.size(), keep.size()});
  }
  std::sort(chosen.begin(), chosen.end());
  for (auto m : chosen) result.family.push_back(fam[m]);
  if (ctx.observer) ctx.observer({k, fam.size(), result.family.size()});
  return result;
}

EdgeSetFamily representative_hc_sets(const Graph& gc, const EdgeSetFamily& fam, const RepContext& ctx) {
  return representative_hc_sets_detailed(gc, fam, ctx).family;
}

std::optional<EdgeSet> torso(const Graph& g, const EdgeSet& x, const VertexSet& c) {
  return torso_in(g, x, c, Graph::complete(c));
}

VertexSet pad_separator(const Graph& g, const VertexSet& a, const VertexSet& c) {
  VertexSet out = c;
  for (auto v : a - out) {
    if (out.count() >= 3) break;
    out.set(v);
  }
  for (auto v : g.vertices() - out) {
    if (out.count() >= 3) break;
    out.set(v);
  }
  return out;
}

EdgeSetFamily trim_separator(const Graph& g, const VertexSet& a, const VertexSet& c, const EdgeSetFamily& fam,
                             const RepContext& ctx) {
  if (fam.empty()) return {};
  if (g.vertex_count() < 3) return fam;
  const VertexSet sep = pad_separator(g, a, c);
  const VertexSet inner = a - sep;
  const Graph kc = Graph::complete(sep);
  std::unordered_map<EdgeSet, std::size_t, BitsHash> first;
  std::vector<std::size_t> owner;
  EdgeSetFamily torsos;
  for (std::size_t m = 0; m < fam.size(); ++m) {
    const auto deg = degrees(g, fam[m]);
    bool ok = true;
    for (auto v : inner)
      if (deg[v] != 2) {
        ok = false;
        break;
      }
    if (!ok) continue;
    const auto t = torso_in(g, fam[m], sep, kc);
    if (!t) continue;
    if (first.emplace(*t, m).second) {
      torsos.push_back(*t);
      owner.push_back(m);
    }
  }
  const auto picked = representative_hc_sets(kc, torsos, ctx);
  std::vector<std::size_t> keep;
  for (const auto& t : picked) keep.push_back(first.at(t));
  std::sort(keep.begin(), keep.end());
  EdgeSetFamily out;
  for (auto m : keep) out.push_back(fam[m]);
  return out;
}

EdgeSetFamily preserving_extension(const Graph& g, const VertexSet& a, const VertexSet& c, const EdgeSetFamily& fam,
                                   const EdgeSet& estar, const RepContext& ctx) {
  if (estar.empty()) return fam;
  std::unordered_map<EdgeSet, bool, BitsHash> seen;
  EdgeSetFamily all;
  for (const auto& s : fam) {
    const auto deg = degrees(g, s);
    VertexSet deficient;
    for (auto v : a)
      if (deg[v] < 2) deficient.set(v);
    const VertexSet sep = deficient | c;
    EdgeSetFamily work{s};
    for (auto i : estar) {
      const auto& e = g.edge(i);
      if (!deficient.test(e.u) && !deficient.test(e.v)) continue;
      const std::size_t size = work.size();
      for (std::size_t w = 0; w < size; ++w) {
        EdgeSet grown = work[w];
        grown.set(i);
        const auto d = degrees(g, grown);
        if (d[e.u] > 2 || d[e.v] > 2) continue;
        work.push_back(grown);
      }
      work = trim_separator(g, a, sep, work, ctx);
    }
    for (auto& w : work)
      if (seen.emplace(w, true).second) all.push_back(w);
  }
  return trim_separator(g, a, c, all, ctx);
}

}  // namespace smw
