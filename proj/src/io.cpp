#include "smw/io.hpp"

#include <string>

#include "smw/cut_functions.hpp"
#include "smw/error.hpp"

namespace smw {

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(v);
  return out;
}

Json edges_json(const Graph& g, const EdgeSet& s) {
  Json out = Json::array();
  for (const auto& e : g.edge_list(s)) out.push_back({e.u, e.v});
  return out;
}

Json split_decomposition_json(const SplitDecomposition& dec) {
  Json primes = Json::array();
  for (const auto& p : dec.primes())
    primes.push_back({{"vertices", to_json(p.vertices())}, {"edges", edges_json(p, p.all_edges())}});
  Json markers = Json::array();
  for (const auto& m : dec.markers()) markers.push_back({{"id", m.marker}, {"primes", {m.prime_a, m.prime_b}}});
  Json tree = Json::array();
  for (const auto& [a, b] : dec.tree_edges()) tree.push_back({a, b});
  return {{"primes", primes}, {"markers", markers}, {"tree_edges", tree}};
}

Json branch_decomposition_json(const BranchDecomposition& bd) {
  Json nodes = Json::array();
  Json leaf_map = Json::object();
  for (std::size_t i = 0; i < bd.node_count(); ++i) {
    Json node = {{"id", i}};
    if (const auto& l = bd.label(i)) {
      node["label"] = *l;
      leaf_map[std::to_string(*l)] = i;
    }
    nodes.push_back(node);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : bd.edges()) edges.push_back({a, b});
  return {{"nodes", nodes}, {"edges", edges}, {"leaf_map", leaf_map}};
}

BranchDecomposition branch_decomposition_from_json(const Json& j) {
  try {
    const auto& nodes = j.at("nodes");
    if (!nodes.is_array()) throw InvalidInput("decomposition: nodes must be an array");
    BranchDecomposition bd;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].at("id").get<std::size_t>() != i) throw InvalidInput("decomposition: node ids must be 0..n-1 in order");
      std::optional<Vertex> label;
      if (nodes[i].contains("label")) label = nodes[i]["label"].get<Vertex>();
      bd.add_node(label);
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("decomposition: edges must be pairs");
      const auto a = e[0].get<std::size_t>();
      const auto b = e[1].get<std::size_t>();
      if (a >= bd.node_count() || b >= bd.node_count()) throw InvalidInput("decomposition: edge endpoint out of range");
      bd.add_edge(a, b);
    }
    if (j.contains("leaf_map")) {
      for (const auto& [key, node] : j["leaf_map"].items()) {
        const auto v = static_cast<Vertex>(std::stoul(key));
        if (bd.leaf_of(v) != node.get<std::size_t>()) throw InvalidInput("decomposition: leaf_map disagrees with labels");
      }
    }
    bd.validate();
    return bd;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    // type errors from the json library, bad leaf_map keys
    throw InvalidInput(std::string("decomposition: ") + e.what());
  }
}

Json width_certificate(const Graph& g, const BranchDecomposition& bd) {
  Json list = Json::array();
  std::size_t width = 0;
  for (const auto& c : cuts(bd)) {
    const std::size_t value = sm_value(g, c.side_a);
    width = std::max(width, value);
    list.push_back({{"side_a", to_json(c.side_a)}, {"side_b", to_json(c.side_b)}, {"sm", value}});
  }
  return {{"width", width}, {"cuts", list}};
}

Json bucket_stats_json(const HcSetsResult& r) {
  Json buckets = Json::array();
  for (const auto& b : r.buckets)
    buckets.push_back({{"d0", to_json(b.signature.d0)},
                       {"d1", to_json(b.signature.d1)},
                       {"d2", to_json(b.signature.d2)},
                       {"edges", b.edges},
                       {"input", b.input},
                       {"output", b.output}});
  return {{"buckets", buckets}, {"dropped", r.dropped}, {"kept", r.family.size()}};
}

Json node_trace_json(const HcResult& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes)
    nodes.push_back({{"home", to_json(n.home)},
                     {"before_trim", n.before_trim},
                     {"after_trim", n.after_trim},
                     {"cover", n.cover}});
  return {{"max_family", r.max_family}, {"nodes", nodes}};
}

}  // namespace smw
