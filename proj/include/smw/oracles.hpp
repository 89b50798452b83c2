#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "smw/graph.hpp"

namespace smw {

struct BruteHc {
  bool hamiltonian = false;
  std::optional<EdgeSet> witness;
};

/// Held–Karp subset dynamic program. Throws Refused above limit vertices.
[[nodiscard]] BruteHc brute_hc(const Graph& g, std::size_t limit = 20);

/// Plain backtracking over simple paths from the lowest vertex.
[[nodiscard]] BruteHc brute_hc_backtrack(const Graph& g, std::size_t limit = 14);

/// Every Hamiltonian cycle of g once. Throws Refused above limit vertices.
[[nodiscard]] std::vector<EdgeSet> all_hamiltonian_cycles(const Graph& g, std::size_t limit = 10);

/// No bipartition of V(g) is a split; scans all 2^(n-1) of them.
[[nodiscard]] bool is_prime_exhaustive(const Graph& g, std::size_t limit = 20);

[[nodiscard]] std::size_t brute_sm_width(const Graph& g, std::size_t limit = 12);
[[nodiscard]] std::size_t brute_mm_width(const Graph& g, std::size_t limit = 12);

/// Certificates of V \ a that some family member completes to a witness are
/// completed by a member of small too. Based on the list of all Hamiltonian
/// cycles of g; in_big decides membership in the larger family.
[[nodiscard]] bool verify_preservation(const Graph& g, const VertexSet& a,
                                       const std::function<bool(const EdgeSet&)>& in_big,
                                       const std::vector<EdgeSet>& small, const std::vector<EdgeSet>& cycles);

/// Convenience form that enumerates the cycles itself. Throws Refused above limit.
[[nodiscard]] bool verify_preservation(const Graph& g, const VertexSet& a, const std::vector<EdgeSet>& big,
                                       const std::vector<EdgeSet>& small, std::size_t limit = 8);

/// The same contract checked directly: every max-degree-two acyclic edge set B
/// of G[V \ a] and every member, with the cross edges searched exhaustively.
[[nodiscard]] bool verify_preservation_direct(const Graph& g, const VertexSet& a, const std::vector<EdgeSet>& big,
                                              const std::vector<EdgeSet>& small, std::size_t limit = 7);

/// ext is a preserving extension of fam by estar: every Y avoiding
/// E(G[a]) ∪ estar that completes some s ∪ E' (s in fam, E' ⊆ estar) to a
/// Hamiltonian cycle is completed by some member of ext.
[[nodiscard]] bool verify_extension(const Graph& g, const VertexSet& a, const std::vector<EdgeSet>& fam,
                                    const std::vector<EdgeSet>& ext, const EdgeSet& estar,
                                    const std::vector<EdgeSet>& cycles);

}  // namespace smw
