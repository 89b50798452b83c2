#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "smw/cut_functions.hpp"
#include "smw/graph.hpp"

namespace smw {

/// Some non-trivial split of a connected graph, or nullopt if it is prime.
///
/// Every split (A, B) of a connected graph has a crossing edge ab, and then
/// u in A, w in B are adjacent exactly when u ~ b and w ~ a. Fixing a, b and a
/// second vertex x of A, each violated pair turns into an implication
/// "u in A => w in A", so the least A containing {a, x} is a closure. Trying
/// every oriented edge and every x is exact and polynomial.
[[nodiscard]] std::optional<Cut> find_split(const Graph& g);

/// A marker shared by exactly two primes.
struct MarkerLink {
  Vertex marker = 0;
  std::size_t prime_a = 0;
  std::size_t prime_b = 0;
};

/// Decomposition of a connected graph into prime graphs glued along markers.
/// Markers take ids from the original id bound upwards. Immutable once built;
/// tot and act are computed eagerly for every (prime, vertex).
class SplitDecomposition {
 public:
  SplitDecomposition(Graph original, std::vector<Graph> primes);

  [[nodiscard]] const Graph& graph() const { return original_; }
  [[nodiscard]] const std::vector<Graph>& primes() const { return primes_; }
  [[nodiscard]] const Graph& prime(std::size_t i) const { return primes_.at(i); }
  [[nodiscard]] std::size_t prime_count() const { return primes_.size(); }
  [[nodiscard]] const std::vector<MarkerLink>& markers() const { return markers_; }
  /// Tree over primes: one edge per marker.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> tree_edges() const;
  [[nodiscard]] bool is_marker(Vertex v) const { return !original_.has_vertex(v) && marker_ids_.test(v); }
  /// One past the largest id used by original vertices and markers.
  [[nodiscard]] std::size_t id_bound() const { return id_bound_; }

  /// tot(v : G_i). Throws InvalidInput if v is not a vertex of prime i.
  [[nodiscard]] const VertexSet& tot(std::size_t prime, Vertex v) const;
  [[nodiscard]] VertexSet tot(std::size_t prime, const VertexSet& x) const;
  /// act(v : G_i) = N(V(G) \ tot(v : G_i)).
  [[nodiscard]] const VertexSet& act(std::size_t prime, Vertex v) const;
  [[nodiscard]] std::size_t weight(std::size_t prime, Vertex v) const { return act(prime, v).count(); }

  /// Glues the primes back together along their markers.
  [[nodiscard]] Graph recompose() const;

 private:
  Graph original_;
  std::vector<Graph> primes_;
  std::vector<MarkerLink> markers_;
  VertexSet marker_ids_;
  std::size_t id_bound_ = 0;
  // Indexed [prime][vertex id].
  std::vector<std::vector<VertexSet>> tot_;
  std::vector<std::vector<VertexSet>> act_;
};

/// Recursive split decomposition; components with at most three vertices,
/// or without a split, become primes.
[[nodiscard]] SplitDecomposition split_decompose(const Graph& g);

/// A decomposition together with one chosen prime G'.
class LiftedContext {
 public:
  LiftedContext(const SplitDecomposition& dec, std::size_t prime) : dec_(&dec), prime_(prime) {}

  [[nodiscard]] const SplitDecomposition& decomposition() const { return *dec_; }
  [[nodiscard]] std::size_t prime_index() const { return prime_; }
  [[nodiscard]] const Graph& prime() const { return dec_->prime(prime_); }
  [[nodiscard]] const Graph& graph() const { return dec_->graph(); }

  [[nodiscard]] const VertexSet& tot(Vertex v) const { return dec_->tot(prime_, v); }
  [[nodiscard]] VertexSet tot(const VertexSet& x) const { return dec_->tot(prime_, x); }
  [[nodiscard]] const VertexSet& act(Vertex v) const { return dec_->act(prime_, v); }
  [[nodiscard]] std::size_t weight(Vertex v) const { return dec_->weight(prime_, v); }

 private:
  const SplitDecomposition* dec_;
  std::size_t prime_;
};

/// f evaluated on tot(x) in the original graph.
[[nodiscard]] std::size_t lifted_value(const LiftedContext& ctx, const VertexSet& x, const CutFunction& f);

/// f lifted onto the prime's vertex set. The context's decomposition must
/// outlive the returned function.
[[nodiscard]] CutFunction lifted(const LiftedContext& ctx, const CutFunction& f);

}  // namespace smw
