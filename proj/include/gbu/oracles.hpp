#pragma once

#include <random>
#include <set>
#include <vector>

#include "gbu/braid.hpp"
#include "gbu/involution.hpp"
#include "gbu/morse.hpp"

// Reference computations that go through paths and lifts instead of the
// closed-form tables, for cross-checking them.
namespace gbu::oracle {

/// Concatenated representing loops of a word in P2 (ordered letters) or B2
/// (unordered letters). Tree letters contribute nothing.
EdgePath represent_word(const BraidModel& m, const CellWord& w);

/// Reads project(represent(g)) in the UD2 generators.
CellWord iota_by_projection(const BraidModel& m, const CellWord& p2_word);

/// Lift of the representing loop of a B2 word from (0,1).
EdgePath lift_word(const BraidModel& m, const CellWord& b2_word);
/// 1 iff that lift ends away from its start.
int theta_by_lifting(const BraidModel& m, const CellWord& b2_word);

/// Reads the path of the first point along the representing loop as a word
/// in the deleted edges.
ZWord p1_by_first_coordinate(const BraidModel& m, const CellWord& p2_word);

/// Cycle search on the modified Hasse diagram by depth-first search.
bool hasse_acyclic_by_dfs(const CellComplex& cx, const GradientField& field);

/// Every class of [Gamma, S^1] realized by a homomorphism psi with
/// psi(c) odd, psi(c_i) even and all |values| <= bound, evaluated on the
/// Schreier words of `basis`.
std::set<std::vector<long>> circle_failing_classes(const AdaptedBasis& basis, int bound);

/// Connected simplicial graph on min_n..max_n vertices, random embedding.
Graph random_graph(std::mt19937& rng, int min_n, int max_n);
/// Same graph with every rotation shuffled.
Graph shuffled_embedding(const Graph& g, std::mt19937& rng);

template <class Gen>
Word<Gen> random_word(std::mt19937& rng, const std::vector<Gen>& alphabet, int max_len) {
  Word<Gen> w;
  if (alphabet.empty()) return w;
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w *= Word<Gen>::generator(alphabet[pick(rng)], sign(rng) ? 1 : -1);
  return w;
}

/// Random z-word of at most max_len letters over z_1..z_k.
ZWord random_z_word(std::mt19937& rng, int k, int max_len);

}  // namespace gbu::oracle
