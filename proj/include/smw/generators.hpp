#pragma once

#include <cstddef>
#include <random>

#include "smw/graph.hpp"

namespace smw {

/// G(n, p) resampled until connected. Requires n >= 1.
[[nodiscard]] Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Vertices 0..n-1 with every edge {i, i+1} and {i, i+k}, plus each other
/// pair at distance at most k with probability one half. Every prefix cut
/// {0..i} has minimum vertex cover at most k, and exactly k for i in
/// [k-1, n-k-1].
[[nodiscard]] Graph banded_graph(std::size_t n, std::size_t k, std::mt19937_64& rng);

}  // namespace smw
