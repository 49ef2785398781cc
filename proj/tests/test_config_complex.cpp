#include <algorithm>
#include <random>

#include "doctest.h"
#include "gbu/config_complex.hpp"
#include "gbu/errors.hpp"
#include "gbu/oracles.hpp"
#include "helpers.hpp"

using namespace gbu;
using namespace gbu::test;

namespace {

// Ordered pairs of disjoint closed cells, counted per dimension.
std::array<int, 3> count_pairs(const Graph& g) {
  std::vector<GCell> cells;
  for (Vertex v = 0; v < g.vertex_count(); ++v) cells.push_back(GCell::vertex(v));
  for (const Edge& e : g.edges()) cells.push_back(GCell::edge(e));
  std::array<int, 3> out{};
  for (const auto& a : cells)
    for (const auto& b : cells)
      if (a.disjoint(b)) ++out[a.dim() + b.dim()];
  return out;
}

}  // namespace

TEST_SUITE("config_complex") {

TEST_CASE("a single edge has two ordered 0-cells and nothing else") {
  const OrderedGraph og = order_graph(graph_of("graph 2\nv 0: 1\nv 1: 0\n"));
  const CellComplex d2 = build_ordered(og);
  CHECK(d2.counts() == std::array<int, 3>{2, 0, 0});
  CHECK(d2.component_count() == 2);
  CHECK(build_unordered(og).counts() == std::array<int, 3>{1, 0, 0});
}

TEST_CASE("Y has 12 ordered and 6 unordered 0-cells") {
  const OrderedGraph og = order_graph(graph_of(kY));
  CHECK(build_ordered(og).counts() == std::array<int, 3>{12, 12, 0});
  CHECK(build_unordered(og).counts() == std::array<int, 3>{6, 6, 0});
}

TEST_CASE("projection sorts the ingredients") {
  const ConfigCell c = ConfigCell::ordered(GCell::vertex(2), GCell::edge(1, 3));
  CHECK(to_string(c) == "(2,(1,3))");
  CHECK(to_string(project(c)) == "{2,(1,3)}");
  CHECK(project(c.swapped()) == project(c));
}

TEST_CASE("1-cells run from the lower to the higher edge endpoint") {
  const OrderedGraph og = order_graph(graph_of(kY));
  const CellComplex d2 = build_ordered(og);
  const int a = d2.id_of(ConfigCell::ordered(GCell::vertex(2), GCell::edge(1, 3)));
  CHECK(d2.cell(d2.initial(a)) == vcell(2, 1));
  CHECK(d2.cell(d2.terminal(a)) == vcell(2, 3));
  const int b = d2.id_of(ConfigCell::ordered(GCell::edge(1, 3), GCell::vertex(2)));
  CHECK(d2.cell(d2.initial(b)) == vcell(1, 2));
  CHECK(d2.cell(d2.terminal(b)) == vcell(3, 2));
}

TEST_CASE("non-cells are rejected by id_of") {
  const CellComplex d2 = build_ordered(order_graph(graph_of(kY)));
  CHECK_THROWS_AS(d2.id_of(ConfigCell::ordered(GCell::vertex(1), GCell::edge(1, 3))), InputError);
  CHECK_THROWS_AS(d2.id_of(ConfigCell::ordered(GCell::vertex(0), GCell::edge(2, 3))), InputError);
}

TEST_CASE("dump lines are sorted and tagged with the dimension") {
  const auto lines = build_unordered(order_graph(graph_of(kY))).dump_lines();
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(std::find(lines.begin(), lines.end(), "{2,(1,3)}:1") != lines.end());
  CHECK(std::find(lines.begin(), lines.end(), "{0,1}:0") != lines.end());
}

TEST_CASE("a path graph configuration space splits into two sheets") {
  const OrderedGraph og = order_graph(corpus_graph("interval"));
  CHECK(build_ordered(og).component_count() == 2);
  CHECK(build_unordered(og).component_count() == 1);
}

TEST_CASE("lifting paths") {
  const OrderedGraph og = order_graph(graph_of(kY));
  const CellComplex d2 = build_ordered(og);
  const CellComplex ud2 = build_unordered(og);
  const int base = d2.id_of(vcell(0, 1));

  SUBCASE("the empty path stays empty") {
    const EdgePath p{ud2.id_of(ConfigCell::unordered(GCell::vertex(0), GCell::vertex(1))), {}};
    const EdgePath l = lift_path(ud2, d2, p, base);
    CHECK(l.start == base);
    CHECK(l.steps.empty());
  }
  SUBCASE("a step lifts to the cell with matching coordinates") {
    const int e = ud2.id_of(ConfigCell::unordered(GCell::vertex(0), GCell::edge(1, 2)));
    const EdgePath l = lift_path(ud2, d2, EdgePath{ud2.initial(e), {{e, true}}}, base);
    REQUIRE(l.steps.size() == 1);
    CHECK(d2.cell(l.steps[0].cell) == ConfigCell::ordered(GCell::vertex(0), GCell::edge(1, 2)));
    CHECK(project_path(d2, ud2, l).steps == std::vector<EdgeStep>{{e, true}});
  }
  SUBCASE("a start outside the fibre is rejected") {
    const int e = ud2.id_of(ConfigCell::unordered(GCell::vertex(0), GCell::edge(1, 2)));
    CHECK_THROWS_AS(lift_path(ud2, d2, EdgePath{ud2.initial(e), {{e, true}}}, d2.id_of(vcell(2, 3))),
                    InputError);
  }
}

TEST_CASE("random graphs: counts, halving, faces and lifts") {
  std::mt19937 rng(3);
  for (int n = 0; n < 30; ++n) {
    const Graph g = oracle::random_graph(rng, 2, 8);
    CAPTURE(format_graph(g));
    const OrderedGraph og = order_graph(g);
    const CellComplex d2 = build_ordered(og);
    const CellComplex ud2 = build_unordered(og);
    const auto expected = count_pairs(og.graph());
    CHECK(d2.counts() == expected);
    for (int d = 0; d < 3; ++d) CHECK(ud2.counts()[d] * 2 == expected[d]);
    for (int d = 1; d < 3; ++d)
      for (int id : d2.cells_of_dim(d)) CHECK(d2.faces(id).size() == std::size_t(2 * d));
    for (int id : d2.cells_of_dim(2)) {
      const EdgePath loop = d2.boundary_loop(id);
      CHECK(loop.steps.size() == 4);
      CHECK(d2.endpoint(loop) == loop.start);
    }
    // Random walk in UD2; its lift projects back and is determined by the start.
    if (ud2.cells_of_dim(1).empty()) continue;
    EdgePath walk{ud2.cells_of_dim(0)[0], {}};
    int at = walk.start;
    for (int s = 0; s < 12; ++s) {
      std::vector<EdgeStep> options;
      for (int c : ud2.cofaces(at)) {
        if (ud2.cell(c).dim() != 1) continue;
        if (ud2.initial(c) == at) options.push_back({c, true});
        if (ud2.terminal(c) == at) options.push_back({c, false});
      }
      if (options.empty()) break;
      const EdgeStep st = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      walk.steps.push_back(st);
      at = ud2.step_target(st);
    }
    const ConfigCell s = ud2.cell(walk.start);
    for (const ConfigCell& start : {ConfigCell::ordered(s.ing[0], s.ing[1]), ConfigCell::ordered(s.ing[1], s.ing[0])}) {
      const EdgePath l = lift_path(ud2, d2, walk, d2.id_of(start));
      CHECK(project_path(d2, ud2, l) == walk);
      CHECK(project(d2.cell(d2.endpoint(l))) == ud2.cell(ud2.endpoint(walk)));
    }
  }
}

}
