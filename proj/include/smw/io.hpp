#pragma once

#include <json.hpp>

#include "smw/branch_decomposition.hpp"
#include "smw/hc_solver.hpp"
#include "smw/repsets.hpp"
#include "smw/split_decomposition.hpp"

namespace smw {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const VertexSet& s);
[[nodiscard]] Json edges_json(const Graph& g, const EdgeSet& s);

/// {"primes": [{"vertices", "edges"}], "markers": [{"id", "primes"}], "tree_edges"}
[[nodiscard]] Json split_decomposition_json(const SplitDecomposition& dec);

/// {"nodes": [{"id", "label"?}], "edges": [[a, b]], "leaf_map": {"vertex": node}}
[[nodiscard]] Json branch_decomposition_json(const BranchDecomposition& bd);

/// Inverse of branch_decomposition_json; throws InvalidInput on malformed
/// documents or an invalid tree.
[[nodiscard]] BranchDecomposition branch_decomposition_from_json(const Json& j);

/// Every cut of bd with its sm value, plus the maximum as "width".
[[nodiscard]] Json width_certificate(const Graph& g, const BranchDecomposition& bd);

[[nodiscard]] Json bucket_stats_json(const HcSetsResult& r);

/// Per-node family sizes from a solver run.
[[nodiscard]] Json node_trace_json(const HcResult& r);

}  // namespace smw
