#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smw/branch_decomposition.hpp"
#include "smw/split_decomposition.hpp"

namespace smw {

/// Vertices of the context's prime with weight at least 3k.
[[nodiscard]] VertexSet heavy_vertices(const LiftedContext& ctx, std::size_t k);

struct MergedPair {
  Vertex u = 0;
  Vertex v = 0;
  Vertex merged = 0;
};

/// A prime with its heavy edges contracted. tot is indexed by vertex id of
/// graph and covers merged vertices as tot(u) | tot(v).
struct ContractedPrime {
  Graph graph;
  std::vector<MergedPair> merges;
  std::vector<VertexSet> tot;

  [[nodiscard]] VertexSet tot_of(const VertexSet& x) const;
};

/// nullopt when the heavy edges do not form a matching, which happens only
/// if k is at most the sm-width of the graph.
[[nodiscard]] std::optional<ContractedPrime> contract_heavy_edges(const LiftedContext& ctx, std::size_t k);

struct PipelineOptions {
  /// Primes (after contraction) up to this size are decomposed optimally.
  std::size_t exact_limit = 12;
  /// Ratio between the accepted lifted-sm width and k.
  std::size_t budget_factor = 18;
};

/// Decomposition of the (uncontracted) prime for the given k, or nullopt if
/// the heavy edges are not a matching or the lifted-sm width exceeds
/// budget_factor * k.
[[nodiscard]] std::optional<BranchDecomposition> prime_decomposition(const LiftedContext& ctx, std::size_t k,
                                                                     const PipelineOptions& opts = {});

/// Glues per-prime decompositions along the markers. Throws InvalidInput if
/// the count does not match or a decomposition does not cover its prime.
[[nodiscard]] BranchDecomposition combine(const SplitDecomposition& dec,
                                          const std::vector<BranchDecomposition>& parts);

struct SmReport {
  BranchDecomposition decomposition;
  /// Recomputed sm-width of decomposition.
  std::size_t width = 0;
  std::size_t prime_count = 0;
  /// Accepted k per prime (0 for primes on at most three vertices).
  std::vector<std::size_t> k_per_prime;
  std::vector<std::size_t> lifted_width_per_prime;
};

/// Split decomposition, per-prime doubling search over k, then combine.
[[nodiscard]] SmReport approx_sm_report(const Graph& g, const PipelineOptions& opts = {});
[[nodiscard]] BranchDecomposition approx_sm_decomposition(const Graph& g, const PipelineOptions& opts = {});

}  // namespace smw
