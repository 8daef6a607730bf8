#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "ehrhart/counting.hpp"
#include "ehrhart/graph_io.hpp"

using namespace ehrhart;

TEST_CASE("graph json parsing") {
  const GraphSpec g =
      graph_from_json_string(R"({"vertices": 4, "edges": [[0,1],[1,2],[2,3]], "root": 1})");
  CHECK(g.num_vertices == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.root == 1);

  const GraphSpec def = graph_from_json_string(R"({"vertices": 2, "edges": [[0,1]]})");
  CHECK(def.root == 0);
}

TEST_CASE("graph json rejection") {
  CHECK_THROWS_AS(graph_from_json_string("not json"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_string(R"([1,2,3])"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_string(R"({"edges": []})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 3})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 3, "edges": [[0,1],[1]]})"),
                  std::invalid_argument);
  // loop
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 3, "edges": [[0,0],[1,2]]})"),
                  std::invalid_argument);
  // duplicate edge (either orientation)
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 3, "edges": [[0,1],[1,0],[1,2]]})"),
                  std::invalid_argument);
  // disconnected
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 4, "edges": [[0,1],[2,3]]})"),
                  std::invalid_argument);
  // root out of range
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 2, "edges": [[0,1]], "root": 5})"),
                  std::invalid_argument);
  // endpoint out of range
  CHECK_THROWS_AS(graph_from_json_string(R"({"vertices": 2, "edges": [[0,7]]})"),
                  std::invalid_argument);
}

TEST_CASE("graph file loading") {
  const std::string path = "test_graph_io_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"vertices": 3, "edges": [[0,1],[1,2]]})";
  }
  const GraphSpec g = load_graph_file(path);
  CHECK(g.num_vertices == 3);
  CHECK(count_graph_dual(g, 1) == 9);  // path on 3 vertices: (2n+1)^2
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_graph_file("does_not_exist.json"), std::invalid_argument);
}

TEST_CASE("graph shortcuts") {
  const auto bip = parse_graph_shortcut("k_bipartite:3,7");
  CHECK(bip.shape == GraphSource::Shape::bipartite);
  CHECK(bip.p1 == 3);
  CHECK(bip.p2 == 7);
  CHECK(bip.spec.num_vertices == 10);
  CHECK(bip.spec.edges.size() == 21);

  const auto me = parse_graph_shortcut("complete_minus_edge:10");
  CHECK(me.shape == GraphSource::Shape::minus_edge);
  CHECK(me.p1 == 10);
  CHECK(me.spec.edges.size() == 44);

  const auto cyc = parse_graph_shortcut("cycle:4");
  CHECK(cyc.shape == GraphSource::Shape::generic);
  CHECK(cyc.spec.num_vertices == 4);
  CHECK(cyc.spec.edges.size() == 4);

  CHECK(parse_graph_shortcut("path:2").spec.edges.size() == 1);
  CHECK(parse_graph_shortcut("complete:5").spec.edges.size() == 10);
}

TEST_CASE("graph shortcut rejection") {
  CHECK_THROWS_AS(parse_graph_shortcut("cycle"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_shortcut("cycle:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_shortcut("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_shortcut("k_bipartite:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_shortcut("k_bipartite:0,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_shortcut("complete_minus_edge:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_shortcut("petersen:10"), std::invalid_argument);
}
