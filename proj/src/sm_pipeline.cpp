#include "smw/sm_pipeline.hpp"

#include <algorithm>
#include <memory>

#include "smw/error.hpp"

namespace smw {

VertexSet heavy_vertices(const LiftedContext& ctx, std::size_t k) {
  VertexSet out;
  for (auto v : ctx.prime().vertices())
    if (ctx.weight(static_cast<Vertex>(v)) >= 3 * k) out.set(v);
  return out;
}

VertexSet ContractedPrime::tot_of(const VertexSet& x) const {
  VertexSet out;
  for (auto v : x) out |= tot.at(v);
  return out;
}

std::optional<ContractedPrime> contract_heavy_edges(const LiftedContext& ctx, std::size_t k) {
  const Graph& prime = ctx.prime();
  const VertexSet heavy = heavy_vertices(ctx, k);
  std::vector<Edge> heavy_edges;
  VertexSet touched;
  for (const auto& e : prime.edges()) {
    if (!heavy.test(e.u) || !heavy.test(e.v)) continue;
    if (touched.test(e.u) || touched.test(e.v)) return std::nullopt;
    touched.set(e.u);
    touched.set(e.v);
    heavy_edges.push_back(e);
  }
  ContractedPrime out;
  out.graph = prime;
  out.tot.assign(kMaxVertexId, VertexSet{});
  for (auto v : prime.vertices()) out.tot[v] = ctx.tot(static_cast<Vertex>(v));
  for (const auto& e : heavy_edges) {
    auto [next, merged] = contract_edge(out.graph, e);
    out.tot[merged] = out.tot[e.u] | out.tot[e.v];
    out.merges.push_back({e.u, e.v, merged});
    out.graph = std::move(next);
  }
  return out;
}

namespace {

/// Replaces each merged leaf by an internal node carrying leaves u and v.
BranchDecomposition expand_merges(const BranchDecomposition& bd, const std::vector<MergedPair>& merges) {
  BranchDecomposition out;
  for (std::size_t i = 0; i < bd.node_count(); ++i) {
    std::optional<Vertex> label = bd.label(i);
    for (const auto& m : merges)
      if (label && *label == m.merged) label.reset();
    out.add_node(label);
  }
  for (const auto& [a, b] : bd.edges()) out.add_edge(a, b);
  for (const auto& m : merges) {
    const auto node = bd.leaf_of(m.merged);
    if (!node) throw InvalidInput("merged vertex missing from decomposition");
    out.add_edge(*node, out.add_node(m.u));
    out.add_edge(*node, out.add_node(m.v));
  }
  return out;
}

std::size_t lifted_sm_width(const Graph& g, const BranchDecomposition& bd, const LiftedContext& ctx) {
  std::size_t w = 0;
  for (const auto& c : cuts(bd)) w = std::max(w, sm_value(g, ctx.tot(c.side_a)));
  return w;
}

}  // namespace

std::optional<BranchDecomposition> prime_decomposition(const LiftedContext& ctx, std::size_t k,
                                                       const PipelineOptions& opts) {
  const Graph& prime = ctx.prime();
  if (prime.vertex_count() <= 3) return caterpillar(prime.vertices());
  auto contracted = contract_heavy_edges(ctx, k);
  if (!contracted) return std::nullopt;

  auto shared = std::make_shared<const ContractedPrime>(std::move(*contracted));
  const Graph& g = ctx.graph();
  CutFunction lifted_mm{"lifted-mm", shared->graph.vertices(),
                        [shared, &g](const VertexSet& x) { return mm_value(g, shared->tot_of(x)); }};
  const Backend backend = shared->graph.vertex_count() <= opts.exact_limit ? Backend::kExact : Backend::kGreedy;
  const auto small = approx_decomposition(lifted_mm, shared->graph.vertices(), backend, opts.exact_limit);
  auto full = expand_merges(small, shared->merges);
  if (lifted_sm_width(g, full, ctx) > opts.budget_factor * k) return std::nullopt;
  return full;
}

BranchDecomposition combine(const SplitDecomposition& dec, const std::vector<BranchDecomposition>& parts) {
  if (parts.size() != dec.prime_count()) throw InvalidInput("one decomposition per prime is required");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].elements() != dec.prime(i).vertices() || parts[i].node_count() == 0)
      throw InvalidInput("decomposition " + std::to_string(i) + " does not cover its prime");
  if (parts.size() == 1) return parts[0];

  std::vector<std::size_t> offset(parts.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = total;
    total += parts[i].node_count();
  }
  std::vector<std::vector<std::size_t>> adj(total);
  std::vector<std::optional<Vertex>> label(total);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t x = 0; x < parts[i].node_count(); ++x) {
      label[offset[i] + x] = parts[i].label(x);
      for (auto y : parts[i].neighbors(x)) adj[offset[i] + x].push_back(offset[i] + y);
    }
  }
  std::vector<bool> removed(total, false);
  auto drop = [&](std::size_t node) {
    for (auto y : adj[node]) std::erase(adj[y], node);
    adj[node].clear();
    removed[node] = true;
  };
  for (const auto& link : dec.markers()) {
    const std::size_t la = offset[link.prime_a] + *parts[link.prime_a].leaf_of(link.marker);
    const std::size_t lb = offset[link.prime_b] + *parts[link.prime_b].leaf_of(link.marker);
    if (adj[la].size() != 1 || adj[lb].size() != 1) throw InvalidInput("marker leaf is not a leaf");
    const std::size_t na = adj[la].front();
    const std::size_t nb = adj[lb].front();
    drop(la);
    drop(lb);
    adj[na].push_back(nb);
    adj[nb].push_back(na);
  }

  BranchDecomposition out;
  std::vector<std::size_t> index(total, 0);
  for (std::size_t x = 0; x < total; ++x)
    if (!removed[x]) index[x] = out.add_node(label[x]);
  for (std::size_t x = 0; x < total; ++x)
    for (auto y : adj[x])
      if (x < y) out.add_edge(index[x], index[y]);
  return out;
}

SmReport approx_sm_report(const Graph& g, const PipelineOptions& opts) {
  if (g.vertex_count() == 0) throw InvalidInput("empty graph");
  if (!g.is_connected()) throw InvalidInput("sm decomposition requires a connected graph");
  SmReport report;
  if (g.vertex_count() == 1) {
    report.decomposition = BranchDecomposition::single(static_cast<Vertex>(g.vertices().first()));
    report.prime_count = 1;
    report.k_per_prime = {0};
    report.lifted_width_per_prime = {0};
    return report;
  }
  const SplitDecomposition dec = split_decompose(g);
  report.prime_count = dec.prime_count();
  std::vector<BranchDecomposition> parts;
  for (std::size_t i = 0; i < dec.prime_count(); ++i) {
    const LiftedContext ctx(dec, i);
    std::size_t accepted = 0;
    std::optional<BranchDecomposition> bd;
    if (dec.prime(i).vertex_count() <= 3) {
      bd = prime_decomposition(ctx, 1, opts);
    } else {
      // Beyond k > n no vertex is heavy and every cut is below the budget.
      for (std::size_t k = 1;; k *= 2) {
        bd = prime_decomposition(ctx, k, opts);
        if (bd) {
          accepted = k;
          break;
        }
        if (k > 2 * g.vertex_count()) throw InvalidInput("doubling search did not terminate");
      }
    }
    report.k_per_prime.push_back(accepted);
    report.lifted_width_per_prime.push_back(lifted_sm_width(g, *bd, ctx));
    parts.push_back(std::move(*bd));
  }
  report.decomposition = combine(dec, parts);
  report.width = f_width(report.decomposition, sm_function(g));
  return report;
}

BranchDecomposition approx_sm_decomposition(const Graph& g, const PipelineOptions& opts) {
  return approx_sm_report(g, opts).decomposition;
}

}  // namespace smw
