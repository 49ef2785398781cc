#include <random>

#include "doctest.h"
#include "gbu/errors.hpp"
#include "gbu/graph.hpp"
#include "gbu/graph_io.hpp"
#include "gbu/oracles.hpp"
#include "helpers.hpp"

using namespace gbu;
using namespace gbu::test;

TEST_SUITE("graph_model") {

TEST_CASE("parsing a graph file") {
  const GraphFile f = parse("# comment\ngraph 4\nv 0: 1\nv 1: 0 2 3  # centre\nv 2: 1\nv 3: 1\n");
  CHECK(f.graph.vertex_count() == 4);
  CHECK(f.graph.link_count() == 3);
  CHECK(f.graph.rotation(1) == std::vector<Vertex>{0, 2, 3});
  CHECK(f.tau_vertices.empty());
}

TEST_CASE("parse errors carry source and line") {
  CHECK_THROWS_WITH_AS(parse("graph 2\nv 0: 1\nbogus 1\n"), doctest::Contains("test:3:"), InputError);
  CHECK_THROWS_AS(parse("v 0: 1\nv 1: 0\n"), InputError);
  CHECK_THROWS_AS(parse("graph 2\nv 0: 1\nv 1:\n"), InputError);
  CHECK_THROWS_AS(parse("graph 2\nv 0: 1\nv 0: 1\n"), InputError);
}

TEST_CASE("edge lists") {
  const auto e = parse_edge_list("0-1, 1-2 2-3");
  REQUIRE(e.size() == 3);
  CHECK(e[2] == std::pair{2, 3});
  CHECK_THROWS_AS(parse_edge_list("0-"), InputError);
}

TEST_CASE("format_graph round trip") {
  const Graph g = corpus_graph("k4");
  const Graph h = graph_of(format_graph(g));
  CHECK(h.edges() == g.edges());
  for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(h.neighbors(v) == g.neighbors(v));
}

TEST_CASE("simplicial input is unchanged by subdivision") {
  const Graph g = graph_of(kTriangle);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("a loop becomes a 3-cycle") {
  const Graph g = graph_of("graph 1\nv 0: 0 0\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.first_betti_number() == 1);
}

TEST_CASE("parallel edges are subdivided without changing the Betti number") {
  const Graph two = graph_of("graph 2\nv 0: 1 1\nv 1: 0 0\n");
  CHECK(two.vertex_count() == 4);
  CHECK(two.edge_count() == 4);
  CHECK(two.first_betti_number() == 1);
  const Graph four = graph_of("graph 2\nv 0: 1 1 1 1\nv 1: 0 0 0 0\n");
  CHECK(four.first_betti_number() == 3);
  for (Vertex v = 0; v < four.vertex_count(); ++v) CHECK(four.degree(v) >= 2);
}

TEST_CASE("disconnected graphs are rejected") {
  CHECK_THROWS_AS(graph_of("graph 4\nv 0: 1\nv 1: 0\nv 2: 3\nv 3: 2\n"), InputError);
}

TEST_CASE("Y is numbered along its DFS tree") {
  const OrderedGraph og = order_graph(graph_of(kY));
  for (Vertex v = 0; v < 4; ++v) CHECK(og.label(v) == v);
  CHECK(og.parent(0) == kNoVertex);
  CHECK(og.parent(2) == 1);
  CHECK(og.parent(3) == 1);
  CHECK(og.deleted_edges().empty());
  CHECK(essential_vertex(og) == BranchVertex{1, 2, 3});
}

TEST_CASE("numbering follows the embedding") {
  const OrderedGraph og = order_graph(graph_of("graph 4\nv 0: 1\nv 1: 0 3 2\nv 2: 1\nv 3: 1\n"));
  CHECK(og.label(2) == 3);
  CHECK(og.label(3) == 2);
}

TEST_CASE("a path has no essential vertex") {
  CHECK_FALSE(essential_vertex(order_graph(graph_of(kPath4))).has_value());
}

TEST_CASE("H-tree picks the smaller branch vertex") {
  const OrderedGraph og = order_graph(corpus_graph("h_tree"));
  const auto ev = essential_vertex(og);
  REQUIRE(ev);
  CHECK(og.children(ev->v).size() >= 2);
  for (Vertex v = 0; v < ev->v; ++v) CHECK(og.children(v).size() <= 1);
}

TEST_CASE("a cycle is rooted at a vertex of tree degree one") {
  const OrderedGraph og = order_graph(graph_of(kTriangle));
  CHECK(og.children(0).size() == 1);
  REQUIRE(og.deleted_edges().size() == 1);
  CHECK(og.deleted_edges()[0] == Edge{0, 2});
}

TEST_CASE("root of tree degree above one is rejected") {
  CHECK_THROWS_WITH_AS(order_graph(graph_of(kY), 1), doctest::Contains("degree-1 root"), InputError);
}

TEST_CASE("invalid proposed trees are rejected") {
  const Graph k4 = corpus_graph("k4");
  using T = std::vector<std::pair<int, int>>;
  CHECK_THROWS_AS(order_graph(k4, std::nullopt, T{{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(order_graph(k4, std::nullopt, T{{0, 1}, {1, 2}, {2, 0}}), InputError);
  CHECK_THROWS_AS(order_graph(k4, std::nullopt, T{{0, 1}, {1, 2}, {2, 9}}), InputError);
}

TEST_CASE("a deleted edge between consecutive vertices is rejected") {
  using T = std::vector<std::pair<int, int>>;
  CHECK_THROWS_WITH_AS(order_graph(corpus_graph("k4"), 0, T{{0, 1}, {1, 2}, {1, 3}}),
                       doctest::Contains("x+1 < y"), InputError);
}

TEST_CASE("random graphs: ordering invariants") {
  std::mt19937 rng(11);
  for (int n = 0; n < 60; ++n) {
    const Graph g = oracle::random_graph(rng, 2, 9);
    const OrderedGraph og = order_graph(g);
    CAPTURE(format_graph(g));
    CHECK(static_cast<int>(og.deleted_edges().size()) == 1 - g.euler_characteristic());
    CHECK(og.children(0).size() == 1);
    for (Vertex v = 1; v < og.vertex_count(); ++v) CHECK(og.parent(v) < v);
    const auto& z = og.deleted_edges();
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK(z[i].lo + 1 < z[i].hi);
      if (i > 0) CHECK((z[i - 1].hi < z[i].hi || (z[i - 1].hi == z[i].hi && z[i - 1].lo > z[i].lo)));
    }
    const OrderedGraph again = order_graph(og.graph(), og.label(0));
    CHECK(again.graph().labels() == og.graph().labels());
    CHECK(again.deleted_edges() == og.deleted_edges());
  }
}

}
