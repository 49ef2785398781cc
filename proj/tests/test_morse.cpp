#include <random>

#include "doctest.h"
#include "gbu/braid.hpp"
#include "gbu/errors.hpp"
#include "gbu/morse.hpp"
#include "gbu/oracles.hpp"
#include "helpers.hpp"

using namespace gbu;
using namespace gbu::test;

namespace {

ConfigCell ve(Vertex v, Vertex a, Vertex b) { return ConfigCell::ordered(GCell::vertex(v), GCell::edge(a, b)); }
ConfigCell ev(Vertex a, Vertex b, Vertex v) { return ConfigCell::ordered(GCell::edge(a, b), GCell::vertex(v)); }

int alternating(const std::array<int, 3>& c) { return c[0] - c[1] + c[2]; }

}  // namespace

TEST_SUITE("morse") {

TEST_CASE("classification on Y") {
  const OrderedGraph og = order_graph(graph_of(kY));
  CHECK(classify_cell(og, project(ve(2, 1, 3))).status == CellStatus::critical);
  CHECK(classify_cell(og, ve(2, 1, 3)).status == CellStatus::critical);
  CHECK(classify_cell(og, vcell(0, 1)).status == CellStatus::critical);
  CHECK(classify_cell(og, vcell(1, 0)).status == CellStatus::critical);
  CHECK(classify_cell(og, project(vcell(0, 1))).status == CellStatus::critical);

  const Classification c = classify_cell(og, vcell(2, 3));
  CHECK(c.status == CellStatus::redundant);
  REQUIRE(c.partner);
  CHECK(*c.partner == ev(1, 2, 3));
  const Classification back = classify_cell(og, ev(1, 2, 3));
  CHECK(back.status == CellStatus::collapsible);
  CHECK(back.partner == vcell(2, 3));

  CHECK_THROWS_AS(classify_cell(og, ve(1, 1, 2)), InputError);
}

TEST_CASE("census of Y") {
  const OrderedGraph og = order_graph(graph_of(kY));
  const CellComplex d2 = build_ordered(og);
  const CellComplex ud2 = build_unordered(og);
  CHECK(build_field(og, d2).critical_counts() == std::array<int, 3>{2, 2, 0});
  CHECK(build_field(og, ud2).critical_counts() == std::array<int, 3>{1, 1, 0});
  const std::string report = census_report("UD2", ud2, build_field(og, ud2));
  CHECK(report.find("UD2 critical: dim0=1, dim1=1, dim2=0") != std::string::npos);
  CHECK(report.find("UD2 critical cell: {2,(1,3)}:1") != std::string::npos);
}

TEST_CASE("connecting cells") {
  CHECK(select_connecting_cell(order_graph(graph_of(kY))) == ve(2, 1, 3));
  const OrderedGraph linear = order_graph(graph_of(
      "graph 6\nv 0: 1\nv 1: 0 2\nv 2: 1 3 5\nv 3: 2 4\nv 4: 3 5\nv 5: 4 2\n"));
  REQUIRE(linear.tree_is_linear());
  REQUIRE(linear.deleted_edges() == std::vector<Edge>{{2, 5}});
  CHECK(select_connecting_cell(linear) == ve(3, 2, 5));
  CHECK_THROWS_AS(select_connecting_cell(order_graph(graph_of(kPath4))), InputError);
}

TEST_CASE("an interval has no collapsed trees") {
  CHECK_THROWS_AS(BraidModel::build(order_graph(graph_of(kPath4))), InputError);
}

TEST_CASE("random graphs: gradient field invariants") {
  std::mt19937 rng(17);
  for (int n = 0; n < 40; ++n) {
    const Graph g = oracle::random_graph(rng, 3, 8);
    CAPTURE(format_graph(g));
    const OrderedGraph og = order_graph(g);
    for (CellKind kind : {CellKind::ordered, CellKind::unordered}) {
      const CellComplex cx = build_complex(og, kind);
      const GradientField f = build_field(og, cx);
      CHECK(oracle::hasse_acyclic_by_dfs(cx, f));
      CHECK(modified_hasse_is_acyclic(cx, f));
      CHECK(alternating(f.critical_counts()) == cx.euler_characteristic());
      for (int id = 0; id < cx.size(); ++id) {
        if (f.partner(id) < 0) continue;
        CHECK(f.partner(f.partner(id)) == id);
      }
      if (kind == CellKind::ordered) {
        CHECK(f.critical_cells(0).size() == 2);
        for (int id = 0; id < cx.size(); ++id)
          CHECK(f.status(id) == f.status(cx.id_of(cx.cell(id).swapped())));
      } else {
        REQUIRE(f.critical_cells(0).size() == 1);
        CHECK(cx.cell(f.critical_cells(0)[0]) == project(vcell(0, 1)));
      }
    }
  }
}

TEST_CASE("random graphs: trees and loop normal forms") {
  std::mt19937 rng(23);
  int models = 0;
  while (models < 25) {
    const Graph g = oracle::random_graph(rng, 4, 8);
    const OrderedGraph og = order_graph(g);
    if (!essential_vertex(og) && og.deleted_edges().empty()) continue;
    ++models;
    CAPTURE(format_graph(g));
    const BraidModel m = BraidModel::build(og);
    const auto& t = m.trees();
    CHECK(m.ordered().cell(t.connecting) == m.generators().connecting);
    CHECK(t.dt_up.size() + t.dt_down.size() == m.ordered().cells_of_dim(0).size());
    for (int z : t.dt_up) {
      const ConfigCell c = m.ordered().cell(z);
      CHECK(c.ing[0].lo < c.ing[1].lo);
      CHECK(m.ordered().endpoint(t.dt.beta(z)) == z);
    }
    for (int z : t.dt_down) CHECK(m.ordered().cell(z).ing[0].lo > m.ordered().cell(z).ing[1].lo);
    for (int z : m.unordered().cells_of_dim(0)) CHECK(m.unordered().endpoint(t.udt.beta(z)) == z);
    CHECK(t.dt.beta(t.dt.base()).steps.empty());

    const auto& table = m.generators();
    for (const ConfigCell& c : table.p2)
      CHECK(normalize_loop(m.ordered(), m.ordered_field(), t.dt, represent(m, c)) == CellWord::generator(c));
    for (const ConfigCell& c : table.b2)
      CHECK(normalize_loop(m.unordered(), m.unordered_field(), t.udt, represent(m, c)) == CellWord::generator(c));

    std::vector<ConfigCell> gens = table.p2;
    for (int k = 0; k < 10; ++k) {
      const CellWord u = oracle::random_word(rng, gens, 5);
      const CellWord v = oracle::random_word(rng, gens, 5);
      EdgePath p = oracle::represent_word(m, u);
      p.append(oracle::represent_word(m, v));
      CHECK(normalize_loop(m.ordered(), m.ordered_field(), t.dt, p) == u * v);
    }
  }
}

}
