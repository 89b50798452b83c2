#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "smw/cut_functions.hpp"
#include "smw/graph.hpp"

namespace smw {

/// Subcubic tree whose leaves are labelled bijectively by a set of elements.
class BranchDecomposition {
 public:
  BranchDecomposition() = default;

  static BranchDecomposition single(Vertex element);

  std::size_t add_node(std::optional<Vertex> label = std::nullopt);
  void add_edge(std::size_t a, std::size_t b);

  [[nodiscard]] std::size_t node_count() const { return adj_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t node) const { return adj_.at(node); }
  [[nodiscard]] const std::optional<Vertex>& label(std::size_t node) const { return label_.at(node); }
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] VertexSet elements() const;
  /// Node carrying element v, or nullopt.
  [[nodiscard]] std::optional<std::size_t> leaf_of(Vertex v) const;

  /// Throws InvalidInput unless this is a tree with maximum degree three,
  /// labels exactly on the leaves, no repeated label, and every internal
  /// node of degree three.
  void validate() const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::optional<Vertex>> label_;
};

/// Builds a decomposition from a recursive bisection: split(S) returns the
/// part S1 of S (|S| >= 2) to separate from S \ S1. Both parts must be non-empty.
[[nodiscard]] BranchDecomposition from_bisection(const VertexSet& elements,
                                                 const std::function<VertexSet(const VertexSet&)>& split);

/// Linear decomposition peeling off elements in increasing id order; its
/// non-trivial cuts are the prefixes {x1..xi}.
[[nodiscard]] BranchDecomposition caterpillar(const VertexSet& elements);

/// One cut per tree edge; side_a holds the elements on the first endpoint's side.
[[nodiscard]] std::vector<Cut> cuts(const BranchDecomposition& bd);

/// Maximum of f over all cuts; zero for decompositions without edges.
[[nodiscard]] std::size_t f_width(const BranchDecomposition& bd, const CutFunction& f);

struct WidthResult {
  std::size_t width = 0;
  BranchDecomposition decomposition;
};

inline constexpr std::size_t kDefaultExactLimit = 16;

/// Minimum f-width decomposition of f.domain by dynamic programming over
/// subsets (3^n / 2 split evaluations). Throws Refused above limit.
[[nodiscard]] WidthResult exact_best_decomposition(const CutFunction& f, std::size_t limit = kDefaultExactLimit);

enum class Backend {
  kExact,   ///< optimal; delegates to exact_best_decomposition
  kGreedy,  ///< recursive bisection by local search; no width guarantee
};

[[nodiscard]] BranchDecomposition approx_decomposition(const CutFunction& f, const VertexSet& elements,
                                                       Backend backend,
                                                       std::size_t exact_limit = kDefaultExactLimit);

}  // namespace smw
