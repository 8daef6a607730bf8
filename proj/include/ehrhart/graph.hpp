#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehrhart {

/// Finite simple connected graph with a designated root vertex. The root
/// fixes the lattice gauge when counting points of the dual symmetric edge
/// polytope; counts do not depend on which vertex is chosen.
struct GraphSpec {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs over 0..num_vertices-1
  int root = 0;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(num_vertices));
    for (auto [u, w] : edges) {
      adj[static_cast<size_t>(u)].push_back(w);
      adj[static_cast<size_t>(w)].push_back(u);
    }
    return adj;
  }

  /// Simple (no loops, no duplicate edges), connected, root in range.
  void validate() const {
    if (num_vertices < 2) throw std::invalid_argument("graph: need at least 2 vertices");
    if (root < 0 || root >= num_vertices) throw std::invalid_argument("graph: root out of range");
    std::set<std::pair<int, int>> seen;
    for (auto [u, w] : edges) {
      if (u < 0 || u >= num_vertices || w < 0 || w >= num_vertices)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (u == w) throw std::invalid_argument("graph: loop edge not allowed");
      auto key = std::minmax(u, w);
      if (!seen.insert(key).second) throw std::invalid_argument("graph: duplicate edge");
    }
    // connectivity
    std::vector<char> vis(static_cast<size_t>(num_vertices), 0);
    std::vector<int> stack{root};
    vis[static_cast<size_t>(root)] = 1;
    auto adj = adjacency();
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != num_vertices) throw std::invalid_argument("graph: not connected");
  }
};

inline GraphSpec make_path(int v) {
  GraphSpec g;
  g.num_vertices = v;
  for (int i = 0; i + 1 < v; ++i) g.edges.emplace_back(i, i + 1);
  g.validate();
  return g;
}

inline GraphSpec make_cycle(int v) {
  if (v < 3) throw std::invalid_argument("cycle graph: need at least 3 vertices");
  GraphSpec g = make_path(v);
  g.edges.emplace_back(v - 1, 0);
  g.validate();
  return g;
}

inline GraphSpec make_complete(int v) {
  GraphSpec g;
  g.num_vertices = v;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) g.edges.emplace_back(i, j);
  g.validate();
  return g;
}

/// K_{m,n} with the first side on vertices 0..m-1 (root side).
inline GraphSpec make_complete_bipartite(int m, int n) {
  GraphSpec g;
  g.num_vertices = m + n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.edges.emplace_back(i, m + j);
  g.validate();
  return g;
}

/// K_v with the edge between the last two vertices removed.
inline GraphSpec make_complete_minus_edge(int v) {
  if (v < 4) throw std::invalid_argument("complete_minus_edge: need at least 4 vertices");
  GraphSpec g;
  g.num_vertices = v;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (!(i == v - 2 && j == v - 1)) g.edges.emplace_back(i, j);
  g.validate();
  return g;
}

/// A graph together with the counting route its shape admits.
struct GraphSource {
  enum class Shape { generic, bipartite, minus_edge };
  GraphSpec spec;
  Shape shape = Shape::generic;
  int p1 = 0, p2 = 0;  // bipartite: (m, n); minus_edge: (v, 0)
};

/// Expands "k_bipartite:m,n", "complete_minus_edge:v", "cycle:v", "path:v",
/// "complete:v". Here v/m/n count graph vertices (the polytope dimension is
/// one less than the vertex total).
inline GraphSource parse_graph_shortcut(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph shortcut: expected \"name:args\", got \"" + s + "\"");
  const std::string name = s.substr(0, colon);
  const std::string args = s.substr(colon + 1);
  auto parse_int = [&](const std::string& t) {
    size_t pos = 0;
    int x;
    try {
      x = std::stoi(t, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("graph shortcut: bad number \"" + t + "\"");
    }
    if (pos != t.size()) throw std::invalid_argument("graph shortcut: bad number \"" + t + "\"");
    return x;
  };
  GraphSource src;
  if (name == "k_bipartite") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("graph shortcut: k_bipartite needs \"m,n\"");
    int m = parse_int(args.substr(0, comma));
    int n = parse_int(args.substr(comma + 1));
    if (m < 1 || n < 1) throw std::invalid_argument("graph shortcut: k_bipartite sides must be >= 1");
    src.spec = make_complete_bipartite(m, n);
    src.shape = GraphSource::Shape::bipartite;
    src.p1 = m;
    src.p2 = n;
    return src;
  }
  int v = parse_int(args);
  if (name == "complete_minus_edge") {
    src.spec = make_complete_minus_edge(v);
    src.shape = GraphSource::Shape::minus_edge;
    src.p1 = v;
  } else if (name == "cycle") {
    src.spec = make_cycle(v);
  } else if (name == "path") {
    src.spec = make_path(v);
  } else if (name == "complete") {
    src.spec = make_complete(v);
  } else {
    throw std::invalid_argument("graph shortcut: unknown shape \"" + name + "\"");
  }
  return src;
}

}  // namespace ehrhart
