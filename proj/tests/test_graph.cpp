#include "doctest.h"

#include <stdexcept>

#include "konig/errors.hpp"
#include "konig/graph.hpp"
#include "konig/io.hpp"
#include "konig/matching.hpp"
#include "test_util.hpp"

using namespace konig;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::edgeless_graph;
using testutil::star_graph;

TEST_CASE("parse_graph handles the basic forms") {
  Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(1, 3));

  Graph isolated = parse_graph("p edge 4 0\n");
  CHECK(isolated.vertex_count() == 4);
  CHECK(isolated.edge_count() == 0);

  // Comments and either endpoint order are accepted.
  Graph flipped = parse_graph("c a triangle\np edge 3 3\ne 2 1\ne 3 2\ne 3 1\n");
  CHECK(flipped.edges() == k3.edges());
}

TEST_CASE("parse_graph errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("p edge 2 1\ne 1 1\n") == 2);       // self-loop
  CHECK(line_of("p edge 3 2\ne 1 2\ne 2 1\n") == 3); // duplicate
  CHECK(line_of("p edge 2 1\ne 1 3\n") == 2);        // out of range
  CHECK(line_of("p edge 2 0\nq 1\n") == 2);          // unknown line
  CHECK(line_of("e 1 2\n") == 1);                    // data before p
  CHECK(line_of("p edge 2 2\ne 1 2\n") == 2);        // fewer edges than declared
  CHECK(line_of("p edge 2 1\n\ne 1 2\n") == 2);      // blank line
  CHECK(line_of("p edge 2 1\ne 1 2\np edge 2 1\n") == 3);
}

TEST_CASE("graph file extensions: matching and parameter lines") {
  GraphFile gf = parse_graph_file(
      "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\nm 1 2\nm 3 4\nk 2\n");
  REQUIRE(gf.matching.has_value());
  CHECK(gf.matching->size() == 2);
  CHECK(gf.k == 2);

  CHECK_THROWS_AS(parse_graph_file("p edge 3 1\ne 1 2\nm 1 3\n"), ParseError);
  CHECK_THROWS_AS(
      parse_graph_file("p edge 3 2\ne 1 2\ne 2 3\nm 1 2\nm 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_file("p edge 1 0\nk 1\nk 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_file("p edge 1 0\nk -1\n"), ParseError);
}

TEST_CASE("serialization round-trips bit-exactly") {
  std::string canonical =
      "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\nm 1 2\nm 3 4\nk 1\n";
  GraphFile gf = parse_graph_file(canonical);
  CHECK(write_graph_file(gf) == canonical);

  // Non-canonical input normalizes to a stable form.
  GraphFile shuffled = parse_graph_file("p edge 4 4\ne 3 2\ne 4 1\ne 2 1\ne 4 3\n");
  std::string once = write_graph_file(shuffled);
  CHECK(once == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
  CHECK(write_graph_file(parse_graph_file(once)) == once);
}

TEST_CASE("write-parse-write is a fixpoint on random instances") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = testutil::random_graph(6 + seed % 5, 1, 2, 2200 + seed);
    GraphFile gf{g, std::nullopt, std::nullopt};
    if (seed % 2 == 0) gf.matching = maximum_matching(g);
    if (seed % 3 == 0) gf.k = static_cast<int>(seed % 4);
    std::string once = write_graph_file(gf);
    GraphFile reparsed = parse_graph_file(once);
    CHECK(write_graph_file(reparsed) == once);
    CHECK(reparsed.graph.edges() == g.edges());
    CHECK(reparsed.k == gf.k);
    if (gf.matching) {
      REQUIRE(reparsed.matching.has_value());
      CHECK(reparsed.matching->edges() == gf.matching->edges());
    }
  }
}

TEST_CASE("delete_edges") {
  Graph k3 = complete_graph(3);
  Graph path = delete_edges(k3, EdgeSet{{1, 2}});
  CHECK(path.edge_count() == 2);
  CHECK(path.has_edge(1, 3));
  CHECK(path.has_edge(2, 3));
  CHECK_FALSE(path.has_edge(1, 2));

  Graph c4 = cycle_graph(4);
  CHECK(delete_edges(c4, EdgeSet{}).edges() == c4.edges());
  CHECK_THROWS_AS(delete_edges(c4, EdgeSet{{1, 3}}), std::invalid_argument);

  // Vertex set is preserved, only edges go; 4 and 6 become pendants.
  Graph g = delete_edges(testutil::counterexample14_graph(), EdgeSet{{3, 4}, {5, 6}});
  CHECK(g.vertex_count() == 14);
  CHECK(g.edge_count() == 17);
  CHECK(g.degree(4) == 1);
  CHECK(g.degree(6) == 1);
}

TEST_CASE("cut_edges") {
  Graph c4 = cycle_graph(4);
  CHECK(cut_edges(c4, VertexSet{1, 3}, VertexSet{2, 4}).size() == 4);
  Graph k3 = complete_graph(3);
  CHECK(cut_edges(k3, VertexSet{1}, VertexSet{1}).empty());
  CHECK(cut_edges(k3, VertexSet{1, 2}, VertexSet{1, 2}) == EdgeSet{{1, 2}});
  CHECK_THROWS_AS(cut_edges(k3, VertexSet{5}, VertexSet{1}),
                  std::invalid_argument);
}

TEST_CASE("cut_edges partitions the edge set") {
  // (A, V\A), (A, A), (V\A, V\A) partition E for random graphs.
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = testutil::random_graph(8, 1, 2, seed);
    std::vector<int> a_ids, b_ids;
    for (int v = 1; v <= 8; ++v) ((seed >> (v % 8)) & 1 ? a_ids : b_ids).push_back(v);
    VertexSet a(a_ids), b(b_ids);
    EdgeSet across = cut_edges(g, a, b);
    EdgeSet inside_a = cut_edges(g, a, a);
    EdgeSet inside_b = cut_edges(g, b, b);
    CHECK(across.size() + inside_a.size() + inside_b.size() == g.edge_count());
    for (const Edge& e : across) {
      CHECK_FALSE(inside_a.contains(e));
      CHECK_FALSE(inside_b.contains(e));
    }
    for (const Edge& e : inside_a) CHECK_FALSE(inside_b.contains(e));
  }
}

TEST_CASE("neighbors") {
  CHECK(neighbors(complete_graph(3), 1) == VertexSet{2, 3});
  CHECK(neighbors(star_graph(3), 1) == VertexSet{2, 3, 4});
  CHECK(neighbors(edgeless_graph(3), 1).empty());
  CHECK_THROWS_AS(neighbors(edgeless_graph(3), 4), std::invalid_argument);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}
