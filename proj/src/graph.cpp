#include "smw/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "smw/error.hpp"

namespace smw {

namespace {

const VertexSet kEmpty{};

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) {
  if (n > kMaxVertexId) throw InvalidInput("graph exceeds vertex capacity");
  vertices_ = VertexSet::prefix(n);
  build(edges);
}

Graph::Graph(const VertexSet& vertices, const std::vector<Edge>& edges) : vertices_(vertices) {
  build(edges);
}

Graph Graph::complete(const VertexSet& vertices) {
  std::vector<Edge> edges;
  for (auto u : vertices)
    for (auto v : vertices)
      if (u < v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(vertices, edges);
}

void Graph::build(const std::vector<Edge>& edges) {
  vertex_count_ = vertices_.count();
  const std::size_t bound = vertices_.empty() ? 0 : *std::max_element(vertices_.begin(), vertices_.end()) + 1;
  adj_.assign(bound, VertexSet{});
  edges_ = edges;
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidInput("parallel edge");
  if (edges_.size() > kMaxEdges) throw InvalidInput("graph exceeds edge capacity");
  edge_index_.assign(bound * bound, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (!vertices_.test(e.u) || !vertices_.test(e.v))
      throw InvalidInput("edge endpoint is not a vertex of the graph");
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
    edge_index_[e.u * bound + e.v] = static_cast<std::int16_t>(i);
    edge_index_[e.v * bound + e.u] = static_cast<std::int16_t>(i);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(Vertex u, Vertex v) const {
  const std::size_t bound = adj_.size();
  if (u >= bound || v >= bound) return -1;
  return edge_index_[u * bound + v];
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= adj_.size()) return kEmpty;
  return adj_[v];
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  VertexSet seen = VertexSet::single(vertices_.first());
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next;
    for (auto v : frontier) next |= adj_[v];
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen == vertices_;
}

EdgeSet Graph::edges_within(const VertexSet& a) const {
  EdgeSet s;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (a.test(edges_[i].u) && a.test(edges_[i].v)) s.set(i);
  return s;
}

EdgeSet Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  EdgeSet s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if ((a.test(e.u) && b.test(e.v)) || (a.test(e.v) && b.test(e.u))) s.set(i);
  }
  return s;
}

EdgeSet Graph::incident_edges(const VertexSet& a) const {
  EdgeSet s;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (a.test(edges_[i].u) || a.test(edges_[i].v)) s.set(i);
  return s;
}

std::vector<Edge> Graph::edge_list(const EdgeSet& s) const {
  std::vector<Edge> out;
  for (auto i : s) out.push_back(edges_[i]);
  return out;
}

EdgeSet Graph::edge_set(const std::vector<Edge>& edges) const {
  EdgeSet s;
  for (const auto& e : edges) {
    const int i = edge_index(e.u, e.v);
    if (i < 0) throw InvalidInput("not an edge of the graph");
    s.set(static_cast<std::size_t>(i));
  }
  return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& a) {
  if (!a.is_subset_of(g.vertices())) throw InvalidInput("vertex set contains unknown vertex id");
  return Graph(a, g.edge_list(g.edges_within(a)));
}

BipartiteGraph cut_graph(const Graph& g, const VertexSet& a) {
  if (!a.is_subset_of(g.vertices())) throw InvalidInput("vertex set contains unknown vertex id");
  const VertexSet b = complement(g, a);
  return {Graph(g.vertices(), g.edge_list(g.edges_between(a, b))), a, b};
}

std::pair<Graph, Vertex> contract_edge(const Graph& g, const Edge& uv) {
  if (!g.has_edge(uv.u, uv.v)) throw InvalidInput("contracted pair is not an edge");
  const auto fresh = static_cast<Vertex>(g.id_bound());
  if (fresh >= kMaxVertexId) throw InvalidInput("no fresh vertex id available");
  VertexSet verts = g.vertices();
  verts.reset(uv.u);
  verts.reset(uv.v);
  verts.set(fresh);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!e.has(uv.u) && !e.has(uv.v)) edges.push_back(e);
  VertexSet merged = g.neighbors(uv.u) | g.neighbors(uv.v);
  merged.reset(uv.u);
  merged.reset(uv.v);
  for (auto w : merged) edges.emplace_back(static_cast<Vertex>(w), fresh);
  return {Graph(verts, edges), fresh};
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet n;
  for (auto v : s) n |= g.neighbors(static_cast<Vertex>(v));
  return n - s;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::exception&) {
        throw InvalidInput("line " + std::to_string(lineno) + ": not an integer: " + tok);
      }
    }
    if (nums.empty()) continue;
    if (nums.size() != 2) throw InvalidInput("line " + std::to_string(lineno) + ": expected two integers");
    rows.push_back(nums);
  }
  if (rows.empty()) throw InvalidInput("missing header line 'n m'");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0) throw InvalidInput("negative size in header");
  if (static_cast<std::size_t>(n) > kMaxVertexId) throw InvalidInput("too many vertices");
  if (static_cast<long long>(rows.size()) - 1 != m)
    throw InvalidInput("header declares " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long long u = rows[i][0];
    const long long v = rows[i][1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.id_bound() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace smw
