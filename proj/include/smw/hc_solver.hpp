#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "smw/branch_decomposition.hpp"
#include "smw/repsets.hpp"

namespace smw {

/// A certificate is an edge set of the host graph; its home is carried by
/// the family holding it.
using Certificate = EdgeSet;

struct CertificateFamily {
  VertexSet home;
  std::vector<Certificate> members;
};

[[nodiscard]] bool is_hamiltonian_cycle(const Graph& g, const EdgeSet& s);

/// s ⊆ E(G[home]), maximum degree two, and acyclic unless s is a
/// Hamiltonian cycle of g.
[[nodiscard]] bool is_certificate(const Graph& g, const VertexSet& home, const EdgeSet& s);

/// True if no certificate of V \ home can complete s to a Hamiltonian cycle
/// for one of these reasons: a vertex lacks outside neighbours for its
/// missing degree, the missing degree exceeds 2 mm(home) or is zero, or s
/// has a cycle. At home = V only Hamiltonian cycles survive.
[[nodiscard]] bool is_dead(const Graph& g, const VertexSet& home, const EdgeSet& s);

/// All certificates sa ∪ sb ∪ E' with E' ⊆ E(G[a, b]).
[[nodiscard]] std::vector<Certificate> conc(const Graph& g, const VertexSet& a, const VertexSet& b,
                                            const Certificate& sa, const Certificate& sb);

/// Vertex-cover trimming: a preserving extension onto a padded minimum vertex
/// cover of G[a, V \ a], with the extension edges stripped again.
[[nodiscard]] std::vector<Certificate> trim_vc(const Graph& g, const VertexSet& a,
                                               const std::vector<Certificate>& fam, const RepContext& ctx = {});

/// For a split (a, V \ a): live certificates, one (the least) per number of
/// paths. Throws InvalidInput if a is not a split side.
[[nodiscard]] std::vector<Certificate> trim_split(const Graph& g, const VertexSet& a,
                                                  const std::vector<Certificate>& fam);

/// Drops dead members, then trim_split on split sides and trim_vc otherwise.
[[nodiscard]] std::vector<Certificate> trim(const Graph& g, const VertexSet& a, const std::vector<Certificate>& fam,
                                            const RepContext& ctx = {});

/// A subset of conc(sa, sb) preserving it with respect to a ∪ b.
[[nodiscard]] std::vector<Certificate> join(const Graph& g, const VertexSet& a, const VertexSet& b,
                                            const Certificate& sa, const Certificate& sb,
                                            const RepContext& ctx = {});

struct TraceEvent {
  enum class Kind { kJoin, kTrim };
  Kind kind = Kind::kTrim;
  /// Home of the result; for joins a and b are the two parts.
  VertexSet home;
  VertexSet a;
  VertexSet b;
  const std::vector<Certificate>* input = nullptr;
  const std::vector<Certificate>* output = nullptr;
};

struct NodeStat {
  VertexSet home;
  std::size_t before_trim = 0;
  std::size_t after_trim = 0;
  std::size_t cover = 0;
};

struct SolveOptions {
  bool trimming = true;
  std::uint64_t seed = 1;
  std::function<void(const TraceEvent&)> trace;
  std::function<void(const RepEvent&)> rep_observer;
};

struct HcResult {
  bool hamiltonian = false;
  std::optional<EdgeSet> witness;
  std::size_t max_family = 0;
  std::vector<NodeStat> nodes;
};

/// Bottom-up certificate dynamic program over bd, a branch decomposition of
/// V(g). With trimming disabled every node keeps its full certificate set.
[[nodiscard]] HcResult solve_hc(const Graph& g, const BranchDecomposition& bd, const SolveOptions& opts = {});

}  // namespace smw
