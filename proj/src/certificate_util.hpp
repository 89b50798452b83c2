#pragma once

#include <array>
#include <cstdint>

#include "smw/graph.hpp"

namespace smw::detail {

using DegreeTable = std::array<std::uint8_t, kMaxVertexId>;

inline DegreeTable degrees(const Graph& g, const EdgeSet& x) {
  DegreeTable deg{};
  for (auto i : x) {
    const auto& e = g.edge(i);
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

inline bool acyclic(const Graph& g, const EdgeSet& x) {
  std::array<std::uint8_t, kMaxVertexId> parent{};
  for (std::size_t v = 0; v < kMaxVertexId; ++v) parent[v] = static_cast<std::uint8_t>(v);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (auto i : x) {
    const auto& e = g.edge(i);
    const auto ru = find(e.u);
    const auto rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = static_cast<std::uint8_t>(rv);
  }
  return true;
}

}  // namespace smw::detail
