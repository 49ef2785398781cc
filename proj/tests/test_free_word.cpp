#include <random>

#include "doctest.h"
#include "gbu/free_word.hpp"
#include "gbu/oracles.hpp"

using namespace gbu;

namespace {

using W = Word<int>;
W g(int i, int e = 1) { return W::generator(i, e); }
std::string name(int i) { return "x" + std::to_string(i); }

}  // namespace

TEST_SUITE("free_word") {

TEST_CASE("words stay reduced") {
  CHECK((g(1) * g(1, -1)).empty());
  CHECK((g(1) * g(2) * g(2, -1) * g(3)).size() == 2);
  CHECK(W{{1, 1}, {2, 1}, {2, -1}, {1, -1}}.empty());
}

TEST_CASE("inverse and powers") {
  const W w = g(1) * g(2, -1) * g(3);
  CHECK((w * w.inverse()).empty());
  CHECK(w.inverse().inverse() == w);
  CHECK(w.pow(0).empty());
  CHECK(w.pow(-2) == w.inverse() * w.inverse());
  CHECK(w.pow(3).size() == 9);
}

TEST_CASE("formatting") {
  CHECK(format_word(W{}, name) == "1");
  CHECK(format_word(g(1) * g(2, -1), name) == "x1*x2^-1");
}

TEST_CASE("exponent sums") {
  const W w = g(1) * g(2) * g(1) * g(2, -1) * g(1, -1) * g(1, -1);
  CHECK(w.exponent_sum(1) == 0);
  CHECK(w.exponent_sum(2) == 0);
  CHECK(g(1).pow(5).exponent_sum(1) == 5);
}

TEST_CASE("random words: group laws and homomorphic extension") {
  std::mt19937 rng(5);
  const std::vector<int> alphabet{1, 2, 3};
  auto f = [](int i) { return i == 1 ? g(2) * g(3) : i == 2 ? g(1, -1) : g(3) * g(3); };
  for (int n = 0; n < 300; ++n) {
    const W u = oracle::random_word(rng, alphabet, 8);
    const W v = oracle::random_word(rng, alphabet, 8);
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK((u * v).map(f) == u.map(f) * v.map(f));
    CHECK(u.inverse().map(f) == u.map(f).inverse());
    for (std::size_t i = 1; i < u.size(); ++i)
      CHECK(u.letters()[i - 1] != u.letters()[i].inverse());
  }
}

}
