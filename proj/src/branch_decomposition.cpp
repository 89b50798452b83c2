#include "smw/branch_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "smw/error.hpp"

namespace smw {

BranchDecomposition BranchDecomposition::single(Vertex element) {
  BranchDecomposition bd;
  bd.add_node(element);
  return bd;
}

std::size_t BranchDecomposition::add_node(std::optional<Vertex> label) {
  adj_.emplace_back();
  label_.push_back(label);
  return adj_.size() - 1;
}

void BranchDecomposition::add_edge(std::size_t a, std::size_t b) {
  if (a >= adj_.size() || b >= adj_.size() || a == b) throw InvalidInput("bad tree edge");
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

std::vector<std::pair<std::size_t, std::size_t>> BranchDecomposition::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (auto b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

VertexSet BranchDecomposition::elements() const {
  VertexSet s;
  for (const auto& l : label_)
    if (l) s.set(*l);
  return s;
}

std::optional<std::size_t> BranchDecomposition::leaf_of(Vertex v) const {
  for (std::size_t i = 0; i < label_.size(); ++i)
    if (label_[i] && *label_[i] == v) return i;
  return std::nullopt;
}

void BranchDecomposition::validate() const {
  const std::size_t n = adj_.size();
  if (n == 0) return;
  std::size_t edge_count = 0;
  for (const auto& a : adj_) edge_count += a.size();
  edge_count /= 2;
  if (edge_count != n - 1) throw InvalidInput("decomposition is not a tree");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adj_[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n) throw InvalidInput("decomposition is not connected");
  VertexSet labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto deg = adj_[i].size();
    if (deg > 3) throw InvalidInput("decomposition node of degree above three");
    const bool leaf = deg <= 1;
    if (leaf != label_[i].has_value()) throw InvalidInput("labels must sit exactly on the leaves");
    if (!leaf && deg != 3) throw InvalidInput("internal node of degree two");
    if (label_[i]) {
      if (labels.test(*label_[i])) throw InvalidInput("element mapped by two leaves");
      labels.set(*label_[i]);
    }
  }
}

namespace {

std::size_t build_subtree(BranchDecomposition& bd, const VertexSet& s,
                          const std::function<VertexSet(const VertexSet&)>& split) {
  if (s.count() == 1) return bd.add_node(static_cast<Vertex>(s.first()));
  const VertexSet left = split(s);
  const VertexSet right = s - left;
  if (left.empty() || right.empty() || !left.is_subset_of(s)) throw InvalidInput("bisection produced an empty part");
  const std::size_t node = bd.add_node();
  bd.add_edge(node, build_subtree(bd, left, split));
  bd.add_edge(node, build_subtree(bd, right, split));
  return node;
}

}  // namespace

BranchDecomposition from_bisection(const VertexSet& elements,
                                   const std::function<VertexSet(const VertexSet&)>& split) {
  BranchDecomposition bd;
  if (elements.empty()) return bd;
  if (elements.count() == 1) return BranchDecomposition::single(static_cast<Vertex>(elements.first()));
  const VertexSet left = split(elements);
  const VertexSet right = elements - left;
  if (left.empty() || right.empty()) throw InvalidInput("bisection produced an empty part");
  const std::size_t a = build_subtree(bd, left, split);
  const std::size_t b = build_subtree(bd, right, split);
  bd.add_edge(a, b);
  return bd;
}

BranchDecomposition caterpillar(const VertexSet& elements) {
  return from_bisection(elements, [](const VertexSet& s) { return VertexSet::single(s.first()); });
}

std::vector<Cut> cuts(const BranchDecomposition& bd) {
  const std::size_t n = bd.node_count();
  std::vector<Cut> out;
  if (n < 2) return out;
  // Root at node 0; below[x] = elements in the subtree of x.
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (auto y : bd.neighbors(x))
      if (parent[y] == n) {
        parent[y] = x;
        stack.push_back(y);
      }
  }
  std::vector<VertexSet> below(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto x = *it;
    if (bd.label(x)) below[x].set(*bd.label(x));
    if (x != 0) below[parent[x]] |= below[x];
  }
  const VertexSet all = below[0];
  for (const auto& [a, b] : bd.edges()) {
    // One endpoint is the parent of the other.
    if (parent[b] == a) {
      out.push_back({all - below[b], below[b]});
    } else {
      out.push_back({below[a], all - below[a]});
    }
  }
  return out;
}

std::size_t f_width(const BranchDecomposition& bd, const CutFunction& f) {
  std::size_t w = 0;
  for (const auto& c : cuts(bd)) w = std::max(w, f(c.side_a));
  return w;
}

WidthResult exact_best_decomposition(const CutFunction& f, std::size_t limit) {
  std::vector<Vertex> elems;
  for (auto v : f.domain) elems.push_back(static_cast<Vertex>(v));
  const std::size_t k = elems.size();
  if (k > limit) throw Refused("exact decomposition refused: " + std::to_string(k) + " elements exceed limit " +
                               std::to_string(limit));
  if (k > 24) throw Refused("exact decomposition supports at most 24 elements");
  if (k == 0) return {0, BranchDecomposition{}};
  if (k == 1) return {0, BranchDecomposition::single(elems[0])};

  const std::uint32_t full = (k == 32) ? ~0U : ((1U << k) - 1);
  auto to_set = [&](std::uint32_t mask) {
    VertexSet s;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) s.set(elems[i]);
    return s;
  };
  std::vector<std::uint16_t> value(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t m = 1; m < full; ++m) value[m] = static_cast<std::uint16_t>(f(to_set(m)));

  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> best(static_cast<std::size_t>(full) + 1, kInf);
  std::vector<std::uint32_t> choice(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    if (s == low) {
      best[s] = value[s];
      continue;
    }
    const std::uint32_t rest = s ^ low;
    std::uint16_t b = kInf;
    std::uint32_t pick = 0;
    for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = low | sub;
      const std::uint16_t w = std::max(best[part], best[s ^ part]);
      if (w < b) {
        b = w;
        pick = part;
      }
      if (sub == 0) break;
    }
    // The root pair of the whole set meets at an edge, not a node; its
    // own value is f(full) = f(empty) = 0 anyway.
    best[s] = s == full ? b : std::max(b, value[s]);
    choice[s] = pick;
  }

  std::vector<std::size_t> index(kMaxVertexId, 0);
  for (std::size_t i = 0; i < k; ++i) index[elems[i]] = i;
  auto to_mask = [&](const VertexSet& s) {
    std::uint32_t m = 0;
    for (auto v : s) m |= 1U << index[v];
    return m;
  };
  auto split = [&](const VertexSet& s) { return to_set(choice[to_mask(s)]); };
  return {best[full], from_bisection(f.domain, split)};
}

namespace {

/// Local-search bisection of s minimising (max(f(A), f(B)), f(A) + f(B)),
/// with parts kept within a third of |s| where possible.
VertexSet greedy_split(const CutFunction& f, const VertexSet& s) {
  std::vector<Vertex> elems;
  for (auto v : s) elems.push_back(static_cast<Vertex>(v));
  const std::size_t n = elems.size();
  if (n == 2) return VertexSet::single(elems[0]);
  VertexSet part;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) part.set(elems[i]);
  const std::size_t lo = std::max<std::size_t>(1, n / 3);
  const std::size_t hi = n - lo;
  auto score = [&](const VertexSet& a) {
    const auto fa = f(a);
    const auto fb = f(s - a);
    return std::make_pair(std::max(fa, fb), fa + fb);
  };
  auto current = score(part);
  for (std::size_t round = 0; round < 4 * n; ++round) {
    bool moved = false;
    auto best_score = current;
    VertexSet best_part;
    for (auto v : elems) {
      VertexSet cand = part;
      if (cand.test(v)) {
        cand.reset(v);
      } else {
        cand.set(v);
      }
      const auto c = cand.count();
      if (c < lo || c > hi) continue;
      const auto sc = score(cand);
      // Strict improvement only; the first (smallest id) move wins ties.
      if (sc < best_score) {
        best_score = sc;
        best_part = cand;
        moved = true;
      }
    }
    if (!moved) break;
    part = best_part;
    current = best_score;
  }
  return part;
}

}  // namespace

BranchDecomposition approx_decomposition(const CutFunction& f, const VertexSet& elements, Backend backend,
                                         std::size_t exact_limit) {
  CutFunction restricted = f;
  restricted.domain = elements;
  switch (backend) {
    case Backend::kExact:
      return exact_best_decomposition(restricted, exact_limit).decomposition;
    case Backend::kGreedy:
      return from_bisection(elements, [&](const VertexSet& s) { return greedy_split(f, s); });
  }
  throw InvalidInput("unknown backend");
}

}  // namespace smw
