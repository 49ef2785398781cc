#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gbu/config_complex.hpp"
#include "gbu/free_word.hpp"
#include "gbu/graph.hpp"
#include "gbu/morse.hpp"

namespace gbu {

/// Generator z_i of pi_1(G): the i-th deleted edge (1-based).
struct ZGen {
  int index = 0;
  friend bool operator==(const ZGen&, const ZGen&) = default;
  friend auto operator<=>(const ZGen&, const ZGen&) = default;
};
using ZWord = Word<ZGen>;
std::string to_string(const ZWord& w);

/// Critical 1-cells of D2(G) and UD2(G) that name the braid generators.
struct GeneratorTable {
  ConfigCell connecting;         // (a,(b,c)), absorbed into DT
  ConfigCell sigma;              // {a,(b,c)} in B2(G)
  ConfigCell rho;                // ((b,c),a) in P2(G)
  std::vector<ConfigCell> p2;    // ordered critical 1-cells except `connecting`
  std::vector<ConfigCell> b2;    // unordered critical 1-cells
  std::vector<Edge> z;           // deleted edges z_1..z_k

  bool is_p2(const ConfigCell& c) const;
  bool is_b2(const ConfigCell& c) const;
};

/// Everything derived from an ordered graph that the braid computations need.
class BraidModel {
 public:
  /// Throws InputError when G is homeomorphic to an interval.
  static BraidModel build(OrderedGraph og);

  const OrderedGraph& graph() const { return og_; }
  const CellComplex& ordered() const { return ordered_; }
  const CellComplex& unordered() const { return unordered_; }
  const GradientField& ordered_field() const { return ordered_field_; }
  const GradientField& unordered_field() const { return unordered_field_; }
  const CollapsedTrees& trees() const { return trees_; }
  const GeneratorTable& generators() const { return table_; }

 private:
  OrderedGraph og_;
  CellComplex ordered_;
  CellComplex unordered_;
  GradientField ordered_field_;
  GradientField unordered_field_;
  CollapsedTrees trees_;
  GeneratorTable table_;
};

/// Representing loop beta_{u1} * g * beta_{u2}^{-1} of a critical 1-cell g
/// outside the tree, in D2 (ordered g) or UD2 (unordered g).
EdgePath represent(const BraidModel& m, const ConfigCell& g);

/// InputError, with close matches, for letters that are neither P2 generators
/// (or the connecting cell) nor B2 generators.
void require_generators(const GeneratorTable& t, const CellWord& w);

/// Inclusion P2(G) -> B2(G) on the closed-form generator table.
CellWord iota(const GeneratorTable& t, const CellWord& w);

/// w -> sigma * w * sigma^{-1}, rewritten in P2 generators.
CellWord conjugate_by_sigma(const GeneratorTable& t, const CellWord& w);

/// Classifying parity B2(G) -> Z_2: {r,(s,t)} counts iff s < r < t.
int theta(const CellWord& w);

/// First-coordinate projection P2(G) -> pi_1(G).
ZWord p1(const GeneratorTable& t, const CellWord& w);

/// Rewrites a theta-even B2 word as a P2 word u with iota(u) == w.
///
/// Scans left to right tracking the parity of each prefix, inserting
/// sigma^{+-1} between letters so every factor is theta-even, then reads
/// each factor off the inclusion and conjugation tables.
CellWord sigma_parity_rewrite(const GeneratorTable& t, const CellWord& w);

/// Parses the word syntax: `(r,(s,t))`, `((s,t),r)`, `{r,(s,t)}`, `*`,
/// `^-1`; `1` or an empty string is the identity.
CellWord parse_cell_word(std::string_view text);
/// Parses `z1*z2^-1` style words; `1` or empty is the identity.
ZWord parse_z_word(std::string_view text);

}  // namespace gbu
