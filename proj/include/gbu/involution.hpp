#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbu/free_word.hpp"
#include "gbu/graph.hpp"
#include "gbu/graph_io.hpp"

namespace gbu {

/// Traversal of a MultiGraph link; forward runs from link.u to link.v.
struct LinkStep {
  int link;
  bool forward;
  friend bool operator==(const LinkStep&, const LinkStep&) = default;
};

struct Walk {
  Vertex start = kNoVertex;
  std::vector<LinkStep> steps;

  Vertex end(const MultiGraph& g) const;
  Walk reversed(const MultiGraph& g) const;
  Walk& append(const Walk& other);
};

/// Words over the generators of a fundamental basis, by index.
using IndexWord = Word<int>;
std::string to_string(const IndexWord& w, const std::string& prefix);

/// Free basis of pi_1 from a BFS spanning tree: one generator per non-tree link.
struct FundamentalBasis {
  Vertex base = kNoVertex;
  std::vector<char> tree_link;
  std::vector<int> generators;        // link ids
  std::vector<int> generator_of_link; // -1 for tree links
  std::vector<Walk> loops;            // tree path * link * tree path

  int rank() const { return static_cast<int>(generators.size()); }
  /// Reads a closed walk at the base as a word in the generators.
  IndexWord word_of(const MultiGraph& g, const Walk& w) const;
  /// Concatenation of generator loops spelling w.
  Walk walk_of(const MultiGraph& g, const IndexWord& w) const;
};

FundamentalBasis fundamental_basis(const MultiGraph& g, Vertex base);

/// Source graph Gamma with a free cellular involution tau and its quotient.
class InvolutionGraph {
 public:
  /// `tau` maps internal vertex indices; InputError lists every vertex or
  /// edge where tau fails to be a free simplicial involution.
  InvolutionGraph(Graph gamma, std::vector<Vertex> tau);

  const Graph& gamma() const { return gamma_; }
  const MultiGraph& gamma_links() const { return gamma_links_; }
  Vertex tau(Vertex v) const { return tau_[v]; }
  const MultiGraph& quotient() const { return quotient_; }
  int vertex_orbit(Vertex v) const { return vertex_orbit_[v]; }
  int link_orbit(int gamma_link) const { return link_orbit_[gamma_link]; }
  /// The smaller of the two preimages of quotient vertex q.
  Vertex lift_vertex(int q) const { return lift_vertex_[q]; }
  /// m = -chi(Gamma)/2, so rank pi_1(Gamma) = 2m+1 and rank pi_1(Gamma/tau) = m+1.
  int m() const { return -gamma_.euler_characteristic() / 2; }

  /// Unique lift of a quotient walk starting at the Gamma vertex `start`.
  Walk lift(const Walk& quotient_walk, Vertex start) const;

 private:
  Graph gamma_;
  MultiGraph gamma_links_;
  std::vector<Vertex> tau_;
  MultiGraph quotient_;
  std::vector<int> vertex_orbit_;
  std::vector<int> link_orbit_;
  std::vector<Vertex> lift_vertex_;
  std::vector<std::pair<int, int>> lifts_of_link_;  // quotient link -> gamma links
};

/// Builds an InvolutionGraph from file-level `tau v` / `tau e` lines (labels).
InvolutionGraph make_involution(const Graph& gamma, const GraphFile& file);

/// Standalone quotient Gamma/tau.
inline const MultiGraph& quotient(const InvolutionGraph& ig) { return ig.quotient(); }

/// 1 iff the lift of a closed quotient walk ends on the other sheet.
int theta1_of_loop(const InvolutionGraph& ig, const Walk& quotient_loop);

/// Bases c, c_1..c_m of pi_1(Gamma/tau) and a, a_1, a'_1, ..., a_m, a'_m of
/// pi_1(Gamma) with a = c^2, a_i = c_i, a'_i = c c_i c^{-1},
/// theta1(c) = 1, theta1(c_i) = 0.
struct AdaptedBasis {
  FundamentalBasis quotient_basis;  // e_0..e_m
  FundamentalBasis gamma_basis;
  std::vector<int> e_theta;         // theta1(e_j)
  int c_generator = -1;             // index j with c = e_j
  IndexWord c;
  std::vector<IndexWord> c_i;
  /// Reidemeister-Schreier generators (a, a_1, a'_1, ...) as words in e_j.
  std::vector<IndexWord> schreier;
  /// The same elements read in gamma_basis after lifting.
  std::vector<IndexWord> lifted;
  int theta1_c = -1;
  std::vector<int> theta1_ci;

  int m() const { return static_cast<int>(c_i.size()); }
};

/// Throws InternalError if any identity fails to check by lifting.
AdaptedBasis adapt_basis(const InvolutionGraph& ig);

}  // namespace gbu
