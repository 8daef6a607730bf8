#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ehrhart/graph.hpp"

namespace ehrhart {

/// Reads {"vertices": v, "edges": [[u, w], ...], "root": r}; root defaults
/// to 0. The parsed graph is validated (simple, connected).
inline GraphSpec graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph file: expected a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw std::invalid_argument("graph file: missing integer field \"vertices\"");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph file: missing array field \"edges\"");
  GraphSpec g;
  g.num_vertices = j["vertices"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("graph file: each edge must be a pair of integers");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("root")) {
    if (!j["root"].is_number_integer())
      throw std::invalid_argument("graph file: \"root\" must be an integer");
    g.root = j["root"].get<int>();
  }
  g.validate();
  return g;
}

inline GraphSpec graph_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph file: invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline GraphSpec load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("graph file: cannot open \"" + path + "\"");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return graph_from_json_string(text);
}

}  // namespace ehrhart
