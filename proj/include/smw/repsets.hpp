#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "smw/graph.hpp"

namespace smw {

/// Edge sets over one host graph's edge indexing.
using EdgeSetFamily = std::vector<EdgeSet>;

/// Arithmetic modulo the Mersenne prime 2^31 - 1.
namespace field {
inline constexpr std::uint64_t kPrime = 2147483647ULL;
[[nodiscard]] inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % kPrime; }
[[nodiscard]] inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
[[nodiscard]] inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }
[[nodiscard]] std::uint64_t inv(std::uint64_t a);
}  // namespace field

/// Column vectors of the graphic matroid of a host graph: the signed
/// incidence matrix with one row per connected component removed.
class MatroidRep {
 public:
  explicit MatroidRep(const Graph& host);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  /// Sparse column of edge i as (row, value) pairs.
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::uint64_t>>& column(std::size_t i) const {
    return columns_.at(i);
  }
  /// True iff the columns of s are linearly independent.
  [[nodiscard]] bool independent(const EdgeSet& s) const;

 private:
  std::size_t rank_ = 0;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> columns_;
};

/// Subfamily Ŝ such that for every q-edge set Y, if some X in fam is disjoint
/// from Y with X ∪ Y a forest, some member of Ŝ is too. Members must have p
/// edges (InvalidInput otherwise); non-forests are dropped and counted.
/// With p + q equal to the rank the result is exact; below it a seeded
/// random projection is applied first; above it the result is empty.
[[nodiscard]] EdgeSetFamily representative_forests(const Graph& host, const EdgeSetFamily& fam, std::size_t p,
                                                   std::size_t q, std::uint64_t seed = 1,
                                                   std::size_t* dropped = nullptr);

struct DegreeSignature {
  VertexSet d0;
  VertexSet d1;
  VertexSet d2;

  friend bool operator==(const DegreeSignature&, const DegreeSignature&) = default;
  friend auto operator<=>(const DegreeSignature&, const DegreeSignature&) = default;
};

/// Degree classes of x over universe, or nullopt if some vertex has degree
/// three or more.
[[nodiscard]] std::optional<DegreeSignature> degree_signature(const Graph& host, const EdgeSet& x,
                                                              const VertexSet& universe);

/// One call of representative_hc_sets, reported to RepContext::observer.
struct RepEvent {
  std::size_t k = 0;
  std::size_t input = 0;
  std::size_t output = 0;
};

struct RepContext {
  std::uint64_t seed = 1;
  std::function<void(const RepEvent&)> observer;
};

struct BucketStat {
  DegreeSignature signature;
  std::size_t edges = 0;
  std::size_t input = 0;
  std::size_t output = 0;
};

struct HcSetsResult {
  EdgeSetFamily family;
  std::vector<BucketStat> buckets;
  /// Members rejected for a vertex of degree three or more, or a cycle.
  std::size_t dropped = 0;
};

/// Subfamily of at most 6^k members (k = |V(gc)|) such that for every
/// Y ⊆ E(gc), if some member is disjoint from Y and completes it to a
/// Hamiltonian cycle of gc, a chosen member does too.
[[nodiscard]] HcSetsResult representative_hc_sets_detailed(const Graph& gc, const EdgeSetFamily& fam,
                                                           const RepContext& ctx = {});
[[nodiscard]] EdgeSetFamily representative_hc_sets(const Graph& gc, const EdgeSetFamily& fam,
                                                   const RepContext& ctx = {});

/// Edge set over Graph::complete(c): each maximal segment of x between
/// vertices of c becomes one edge. nullopt ("dead") if a path ends outside
/// c, or a cycle avoids c or meets it in fewer than three vertices.
[[nodiscard]] std::optional<EdgeSet> torso(const Graph& g, const EdgeSet& x, const VertexSet& c);

/// c grown to at least three vertices with the lowest ids of a, then of the
/// rest of g.
[[nodiscard]] VertexSet pad_separator(const Graph& g, const VertexSet& a, const VertexSet& c);

/// Members are edge sets of G[a ∪ c], c separating a \ c from the rest.
/// Keeps at most 6^|c| members (c padded to three) such that every Y ⊆
/// E(G[V \ (a \ c)]) completed by some member to a Hamiltonian cycle is
/// still completed by a kept one. Members leaving a vertex of a \ c with
/// degree below two are dropped.
[[nodiscard]] EdgeSetFamily trim_separator(const Graph& g, const VertexSet& a, const VertexSet& c,
                                           const EdgeSetFamily& fam, const RepContext& ctx = {});

/// Extension of fam ⊆ cert(a) by estar = E(G[a, c \ a]), c a vertex cover
/// of G[a, V \ a]: every member is s ∪ E' with s in fam and E' ⊆ estar, and
/// every Hamiltonian completion Y (avoiding E(G[a]) ∪ estar) of some s ∪ E'
/// is a completion of some member.
[[nodiscard]] EdgeSetFamily preserving_extension(const Graph& g, const VertexSet& a, const VertexSet& c,
                                                 const EdgeSetFamily& fam, const EdgeSet& estar,
                                                 const RepContext& ctx = {});

}  // namespace smw
