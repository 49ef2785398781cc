#include <random>
#include <set>

#include "doctest.h"
#include "gbu/braid.hpp"
#include "gbu/errors.hpp"
#include "gbu/oracles.hpp"
#include "helpers.hpp"

using namespace gbu;
using namespace gbu::test;

namespace {

CellWord w(const std::string& s) { return parse_cell_word(s); }
CellWord gen(const ConfigCell& c, int e = 1) { return CellWord::generator(c, e); }

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("word syntax") {
  CHECK(w("").empty());
  CHECK(w("1").empty());
  const CellWord x = w("(2,(1,3))*{0,1}^-1");
  REQUIRE(x.size() == 2);
  CHECK(x.letters()[0].gen == ConfigCell::ordered(GCell::vertex(2), GCell::edge(1, 3)));
  CHECK(x.letters()[1].exp == -1);
  CHECK(to_string(w("((1,3),2)*{2,(1,3)}^-1")) == "((1,3),2)*{2,(1,3)}^-1");
  CHECK_THROWS_AS(w("(1,(2"), InputError);
  CHECK(w("(1,2)^2").size() == 2);
  CHECK_THROWS_AS(w("(1,2)^"), InputError);
  CHECK_THROWS_AS(w("(1,2)*"), InputError);
  CHECK(to_string(parse_z_word("z1*z3^-1")) == "z1*z3^-1");
  CHECK(parse_z_word("1").empty());
  CHECK_THROWS_AS(parse_z_word("z0"), InputError);
  CHECK_THROWS_AS(parse_z_word("y1"), InputError);
}

TEST_CASE("K4 generator table") {
  const BraidModel m = corpus_model("k4");
  const GeneratorTable& t = m.generators();
  CHECK(to_string(t.sigma) == "{1,(0,2)}");
  CHECK(to_string(t.rho) == "((0,2),1)");
  CHECK(t.p2.size() == 9);
  CHECK(t.b2.size() == 5);
  CHECK(t.z.size() == 3);

  SUBCASE("inclusion") {
    CHECK(iota(t, w("(0,(1,3))")) == w("{0,(1,3)}"));
    CHECK(iota(t, gen(t.rho)) == gen(t.sigma).pow(2));
  }
  SUBCASE("classifying parity") {
    CHECK(theta(w("{2,(1,3)}")) == 1);
    CHECK(theta(w("{0,(1,3)}")) == 0);
    CHECK(theta(w("{3,(0,2)}")) == 0);
    CHECK(theta(gen(t.sigma)) == 1);
    CHECK(theta(CellWord{}) == 0);
  }
  SUBCASE("first coordinate") {
    CHECK(p1(t, gen(t.rho)) == ZWord::generator(ZGen{1}));
    CHECK(p1(t, w("(0,(1,3))")).empty());
    CHECK(p1(t, w("((1,3),0)")) == ZWord::generator(ZGen{2}));
  }
  SUBCASE("rewriting") {
    CHECK(sigma_parity_rewrite(t, gen(t.sigma).pow(2)) == gen(t.rho));
    for (const ConfigCell& c : t.p2) CHECK(sigma_parity_rewrite(t, iota(t, gen(c))) == gen(c));
    CHECK_THROWS_AS(sigma_parity_rewrite(t, gen(t.sigma)), InputError);
  }
  SUBCASE("conjugation") {
    CHECK_THROWS_AS(conjugate_by_sigma(t, gen(t.connecting)), InputError);
    CHECK(conjugate_by_sigma(t, CellWord{}).empty());
  }
  SUBCASE("unknown generators") {
    CHECK_THROWS_WITH_AS(require_generators(t, w("(0,(1,2))")), doctest::Contains("did you mean"), InputError);
    CHECK_THROWS_AS(require_generators(t, w("{0,1}")), InputError);
    CHECK_NOTHROW(require_generators(t, w("(0,(1,3))*{2,(1,3)}")));
  }
}

TEST_CASE("Y: theta of the single braid generator is one") {
  const BraidModel m = corpus_model("y");
  CHECK(to_string(m.generators().sigma) == "{2,(1,3)}");
  CHECK(theta(w("{2,(1,3)}")) == 1);
  CHECK(oracle::theta_by_lifting(m, w("{2,(1,3)}")) == 1);
  CHECK(m.generators().p2.size() == 1);
}

TEST_CASE("closed forms agree with path computations") {
  for (const char* name : {"k4", "circle_chord", "theta", "k33", "h_tree", "triangle_tails"}) {
    CAPTURE(name);
    const BraidModel m = corpus_model(name);
    const GeneratorTable& t = m.generators();
    std::mt19937 rng(29);
    for (const ConfigCell& c : t.p2) {
      CHECK(iota(t, gen(c)) == oracle::iota_by_projection(m, gen(c)));
      CHECK(p1(t, gen(c)) == oracle::p1_by_first_coordinate(m, gen(c)));
      const CellWord s = gen(t.sigma);
      CHECK(iota(t, conjugate_by_sigma(t, gen(c))) == s * iota(t, gen(c)) * s.inverse());
      CHECK(iota(t, conjugate_by_sigma(t, conjugate_by_sigma(t, gen(c)))) ==
            iota(t, gen(t.rho) * gen(c) * gen(t.rho, -1)));
    }
    for (const ConfigCell& c : t.b2) CHECK(theta(gen(c)) == oracle::theta_by_lifting(m, gen(c)));
    for (int n = 0; n < 200; ++n) {
      const CellWord u = oracle::random_word(rng, t.p2, 8);
      CHECK(iota(t, u) == oracle::iota_by_projection(m, u));
      CHECK(sigma_parity_rewrite(t, iota(t, u)) == u);
      const CellWord b = oracle::random_word(rng, t.b2, 8);
      CHECK(theta(b) == oracle::theta_by_lifting(m, b));
      if (theta(b) == 0) CHECK(iota(t, sigma_parity_rewrite(t, b)) == b);
    }
  }
}

TEST_CASE("inclusion is injective on short words") {
  const BraidModel m = corpus_model("circle_chord");
  const GeneratorTable& t = m.generators();
  std::vector<CellWord> frontier{CellWord{}};
  std::set<CellWord> words{CellWord{}};
  for (int len = 0; len < 4; ++len) {
    std::vector<CellWord> next;
    for (const CellWord& u : frontier)
      for (const ConfigCell& c : t.p2)
        for (int e : {1, -1}) {
          const CellWord v = u * gen(c, e);
          if (v.size() == u.size() + 1 && words.insert(v).second) next.push_back(v);
        }
    frontier = std::move(next);
  }
  std::set<CellWord> images;
  for (const CellWord& u : words) images.insert(iota(t, u));
  CHECK(images.size() == words.size());
}

}
