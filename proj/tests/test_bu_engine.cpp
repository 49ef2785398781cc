#include <random>

#include "doctest.h"
#include "gbu/bu_engine.hpp"
#include "gbu/errors.hpp"
#include "gbu/oracles.hpp"
#include "helpers.hpp"

using namespace gbu;
using namespace gbu::test;

namespace {

ZWord z(int i, int e = 1) { return ZWord::generator(ZGen{i}, e); }
CellWord gen(const ConfigCell& c, int e = 1) { return CellWord::generator(c, e); }

HomotopyClass trivial(int m) { return HomotopyClass{std::vector<ZWord>(2 * m + 1)}; }

const std::vector<std::pair<int, int>> kEssentialChordTree{{0, 1}, {2, 3}, {4, 0}, {0, 2}};

BraidModel chord_model(bool essential) {
  const Graph g = corpus_graph("circle_chord");
  return BraidModel::build(essential ? order_graph(g, 3, kEssentialChordTree) : order_graph(g));
}

}  // namespace

TEST_SUITE("bu_engine") {

TEST_CASE("target types") {
  CHECK(classify_target(graph_of(kPath4).as_multigraph()) == TargetType::interval);
  CHECK(classify_target(MultiGraph(std::vector<std::vector<Vertex>>(1))) == TargetType::interval);
  CHECK(classify_target(parse("graph 1\nv 0: 0 0\n").graph) == TargetType::circle);
  CHECK(classify_target(graph_of(kTriangle).as_multigraph()) == TargetType::circle);
  CHECK(classify_target(graph_of(kY).as_multigraph()) == TargetType::tree);
  CHECK(classify_target(corpus_graph("h_tree").as_multigraph()) == TargetType::tree);
  CHECK(classify_target(parse("graph 2\nv 0: 1 1 1\nv 1: 0 0 0\n").graph) == TargetType::general);
  CHECK(classify_target(corpus_graph("triangle_tails").as_multigraph()) == TargetType::general);
}

TEST_CASE("class text") {
  CHECK(parse_class_text("z1;z2^-1 # c\n\n1\n") == std::vector<std::string>{"z1", "z2^-1", "1"});
  const HomotopyClass h = class_from_entries({"z1*z2", "1"}, 2);
  REQUIRE(h.words.size() == 2);
  CHECK(h.words[0] == z(1) * z(2));
  CHECK_THROWS_AS(class_from_entries({"z3"}, 2), InputError);
  CHECK(circle_class_from_entries({"3", "-2", "z1*z1", "z1^-1"}) == std::vector<long>{3, -2, 2, -1});
  CHECK_THROWS_AS(circle_class_from_entries({"x"}), InputError);
}

TEST_CASE("circle targets") {
  SUBCASE("odd class on the hexagon fails") {
    const CircleDecision d = classify_circle({3}, 0);
    CHECK_FALSE(d.holds);
    CHECK(d.psi_c == 3);
    CHECK(d.psi_ci.empty());
  }
  CHECK(classify_circle({4}, 0).holds);
  CHECK(classify_circle({3, 2, 5}, 1).holds);
  CHECK(classify_circle({4, 2, 2}, 1).holds);
  SUBCASE("odd p with matching pairs fails") {
    const CircleDecision d = classify_circle({-1, 2, 2, 0, 0}, 2);
    CHECK_FALSE(d.holds);
    CHECK(d.psi_c == -1);
    CHECK(d.psi_ci == std::vector<long>{4, 0});
  }
  CHECK_THROWS_AS(classify_circle({1, 2}, 1), InputError);
}

TEST_CASE("the t-alphabet") {
  CHECK(to_t_alphabet(z(1)) == z(1));
  CHECK(to_t_alphabet(z(2)) == z(2) * z(1));
  CHECK(from_t_alphabet(z(2)) == z(2) * z(1, -1));
  CHECK(to_t_string(z(2) * z(1, -1)) == "t2*t1^-1");
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    const ZWord w = oracle::random_z_word(rng, 4, 10);
    CHECK(from_t_alphabet(to_t_alphabet(w)) == w);
    CHECK(to_t_alphabet(from_t_alphabet(w)) == w);
  }
}

TEST_CASE("key elements in both branches") {
  SUBCASE("linear") {
    const BraidModel m = chord_model(false);
    const KeyElements k = build_key_elements(m);
    CHECK(k.branch == Branch::linear);
    CHECK(p1(m.generators(), gen(k.rho)) == z(1));
    REQUIRE(k.x1_prime);
    CHECK(k.lambdas.size() == 2);
  }
  SUBCASE("essential") {
    const BraidModel m = chord_model(true);
    const KeyElements k = build_key_elements(m);
    CHECK(k.branch == Branch::essential);
    CHECK(p1(m.generators(), gen(k.rho)).empty());
    CHECK_FALSE(k.x1_prime);
    for (std::size_t i = 0; i < k.lambdas.size(); ++i) {
      CHECK(p1(m.generators(), gen(k.lambdas[i])).empty());
      CHECK(p1(m.generators(), k.lambda_primes[i]) == z(static_cast<int>(i) + 1));
    }
  }
  SUBCASE("a tree making lambda non-critical is rejected") {
    const Graph g = corpus_graph("circle_chord");
    CHECK_THROWS_WITH_AS(build_key_elements(BraidModel::build(order_graph(g, std::nullopt, {{{1, 0}, {0, 2}, {0, 4}, {2, 3}}}))),
                         doctest::Contains("not critical"), InputError);
  }
  SUBCASE("trees have no key elements") {
    CHECK_THROWS_AS(build_key_elements(corpus_model("y")), InputError);
  }
}

TEST_CASE("witness for the trivial class") {
  const AdaptedBasis basis = adapt_basis(corpus_involution("gamma_banana4"));
  SUBCASE("essential") {
    const BraidModel m = chord_model(true);
    const KeyElements k = build_key_elements(m);
    const WitnessDiagram w = construct_witness(trivial(1), m, k, basis);
    CHECK(w.psi_c == gen(k.sigma));
    CHECK(w.psi_ci == std::vector<CellWord>{CellWord{}});
    CHECK(w.phi[0] == gen(k.rho));
    for (const ZWord& x : w.p1_phi) CHECK(x.empty());
  }
  SUBCASE("linear") {
    const BraidModel m = chord_model(false);
    const KeyElements k = build_key_elements(m);
    const WitnessDiagram w = construct_witness(trivial(1), m, k, basis);
    CHECK(w.psi_c == iota(m.generators(), gen(k.lambdas[0], -1)) * gen(k.sigma));
    CHECK(w.theta_psi_c == 1);
    for (const ZWord& x : w.p1_phi) CHECK(x.empty());
  }
}

TEST_CASE("witnesses for random classes") {
  std::mt19937 rng(13);
  for (const char* source : {"gamma_hexagon", "gamma_banana4", "gamma_cube"}) {
    const AdaptedBasis basis = adapt_basis(corpus_involution(source));
    for (bool essential : {true, false}) {
      CAPTURE(source);
      CAPTURE(essential);
      const BraidModel m = chord_model(essential);
      const KeyElements k = build_key_elements(m);
      const int kk = static_cast<int>(m.generators().z.size());
      for (int n = 0; n < 40; ++n) {
        HomotopyClass alpha;
        for (int j = 0; j < 2 * basis.m() + 1; ++j) alpha.words.push_back(oracle::random_z_word(rng, kk, 6));
        const WitnessDiagram w = construct_witness(alpha, m, k, basis);
        CHECK(w.p1_phi == alpha.words);
        CHECK(w.theta_psi_c == 1);
        for (int t : w.theta_psi_ci) CHECK(t == 0);
        for (std::size_t j = 0; j < w.phi.size(); ++j)
          CHECK(oracle::p1_by_first_coordinate(m, w.phi[j]) == alpha.words[j]);
      }
    }
  }
}

TEST_CASE("tree targets") {
  const BraidModel m = corpus_model("y");
  const WitnessDiagram w = classify_tree(m, adapt_basis(corpus_involution("gamma_banana4")));
  CHECK(to_string(w.psi_c) == "{2,(1,3)}");
  CHECK(w.psi_ci == std::vector<CellWord>{CellWord{}});
  CHECK(w.theta_psi_c == 1);
}

TEST_CASE("decide") {
  const InvolutionGraph hexagon = corpus_involution("gamma_hexagon");
  const InvolutionGraph banana = corpus_involution("gamma_banana4");
  SUBCASE("interval holds") {
    const Decision d = decide(hexagon, corpus_graph("interval").as_multigraph(), {});
    CHECK(d.target == TargetType::interval);
    CHECK(d.holds);
  }
  SUBCASE("circle") {
    const MultiGraph circle = read_graph_file(corpus_path("circle")).graph;
    CHECK_FALSE(decide(hexagon, circle, {"3"}).holds);
    CHECK(decide(hexagon, circle, {"2"}).holds);
    CHECK(decide(banana, circle, {"3", "2", "5"}).holds);
  }
  SUBCASE("tree fails") {
    const Decision d = decide(banana, graph_of(kY).as_multigraph(), {});
    CHECK(d.target == TargetType::tree);
    CHECK_FALSE(d.holds);
    REQUIRE(d.witness);
  }
  SUBCASE("general fails in either branch") {
    const MultiGraph chord = corpus_graph("circle_chord").as_multigraph();
    const Decision lin = decide(banana, chord, {"z1", "z2", "1"});
    const Decision ess = decide(banana, chord, {"z1", "z2", "1"}, {3, kEssentialChordTree});
    CHECK(lin.branch == Branch::linear);
    CHECK(ess.branch == Branch::essential);
    CHECK_FALSE(lin.holds);
    CHECK_FALSE(ess.holds);
    const std::string human = format_decision(ess, OutputFormat::human);
    CHECK(human.find("decision: fails") != std::string::npos);
    CHECK(human.find("branch: essential") != std::string::npos);
    const std::string machine = format_decision(ess, OutputFormat::machine);
    CHECK(machine.find("decision=fails\n") != std::string::npos);
    CHECK(machine.find("check=") != std::string::npos);
  }
  SUBCASE("class errors") {
    const MultiGraph chord = corpus_graph("circle_chord").as_multigraph();
    CHECK_THROWS_AS(decide(banana, chord, {"z1", "z5", "1"}), InputError);
    CHECK_THROWS_AS(decide(banana, chord, {"z1"}), InputError);
  }
}

}
