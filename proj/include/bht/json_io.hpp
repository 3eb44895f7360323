#pragma once

#include <json.hpp>

#include "bht/graph.hpp"

namespace bht {

// Edge-list interchange form: {"n": int, "edges": [[u,v],...]}.
inline nlohmann::json graph_to_edge_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return j;
}

inline Graph graph_from_edge_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw format_error("edge-list JSON needs fields n and edges");
  int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxVertices) throw format_error("edge-list JSON vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw format_error("edge entries must be pairs");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const std::invalid_argument& ex) {
    throw format_error(std::string("bad edge list: ") + ex.what());
  }
}

}  // namespace bht
