#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbu/config_complex.hpp"
#include "gbu/free_word.hpp"
#include "gbu/graph.hpp"

namespace gbu {

enum class CellStatus { critical, redundant, collapsible };

std::string_view to_string(CellStatus s);

struct Classification {
  CellStatus status = CellStatus::critical;
  /// Matched cell: one dimension up for redundant, one down for collapsible.
  std::optional<ConfigCell> partner;
};

/// Vertex ingredient in `slot` is critical: it is 0, or trading it for its
/// tree edge e_v would collide with the other ingredient.
bool vertex_ingredient_critical(const OrderedGraph& og, const ConfigCell& c, int slot);

/// Edge ingredient in `slot` is critical: it is deleted, or it is e_v and a
/// vertex ingredient u adjacent to tau(e_v) satisfies tau(e_v) < u < v.
bool edge_ingredient_critical(const OrderedGraph& og, const ConfigCell& c, int slot);

/// Farley-Sabalka status of a cell of D2(G) or UD2(G).
///
/// The cell is critical when both ingredients are critical. Otherwise the
/// smallest non-critical ingredient decides: a vertex v makes the cell
/// redundant (partner: v replaced by e_v), an edge e_v makes it collapsible
/// (partner: e_v replaced by v). Throws InputError if c is not a cell.
Classification classify_cell(const OrderedGraph& og, const ConfigCell& c);

/// Discrete gradient field on one complex, indexed by cell id.
class GradientField {
 public:
  CellStatus status(int id) const { return status_[id]; }
  /// Matched cell id, or -1 for critical cells.
  int partner(int id) const { return partner_[id]; }
  std::vector<int> critical_cells(int dim) const;
  std::array<int, 3> critical_counts() const;
  int size() const { return static_cast<int>(status_.size()); }

 private:
  friend GradientField build_field(const OrderedGraph&, const CellComplex&);
  std::vector<CellStatus> status_;
  std::vector<int> partner_;
  std::vector<int> dims_;
};

/// Classifies every cell and checks that the result is a matching whose
/// modified Hasse diagram is acyclic; InternalError otherwise.
GradientField build_field(const OrderedGraph& og, const CellComplex& cx);

/// Hasse diagram with matched arrows reversed admits a topological order.
bool modified_hasse_is_acyclic(const CellComplex& cx, const GradientField& field);

/// Per-dimension cell and critical-cell counts plus the critical cells.
std::string census_report(std::string_view name, const CellComplex& cx, const GradientField& field);

/// The critical 1-cell (a,(b,c)), b < a < c, that joins the two trees of
/// the collapsible forest of D2(G): (v1,(v,v2)) at the first essential
/// vertex, else (x1+1,(x1,y1)) for a linear tree.
ConfigCell select_connecting_cell(const OrderedGraph& og);

/// Spanning tree of the 1-skeleton with unique tree paths from the base.
class SpanningTree {
 public:
  SpanningTree() = default;
  /// Throws InternalError unless `tree_cells` span a tree through every 0-cell.
  SpanningTree(const CellComplex& cx, const std::vector<int>& tree_cells, int base);

  int base() const { return base_; }
  bool contains(int cell) const { return in_tree_[cell] != 0; }
  /// The simple tree path from the base to `zero_cell`.
  EdgePath beta(int zero_cell) const;

 private:
  int base_ = -1;
  std::vector<char> in_tree_;
  std::vector<std::optional<EdgeStep>> arrival_;  // per cell id, 0-cells only
  std::vector<int> source_;                       // 0-cell the arrival step leaves
};

struct CollapsedTrees {
  SpanningTree udt;         // UD2: all 0-cells + collapsible 1-cells
  SpanningTree dt;          // D2: DF plus the connecting cell
  int connecting = -1;      // ordered cell id of (a,(b,c))
  std::vector<int> dt_up;   // ordered 0-cells (w1,w2) with w1 < w2
  std::vector<int> dt_down; // ordered 0-cells with w1 > w2
};

/// Throws InputError when G is homeomorphic to an interval.
CollapsedTrees build_trees(const OrderedGraph& og, const CellComplex& ordered,
                           const GradientField& ordered_field, const CellComplex& unordered,
                           const GradientField& unordered_field, const ConfigCell& connecting);

using CellWord = Word<ConfigCell>;
std::string to_string(const CellWord& w);

/// Reads a based loop as a word in the critical 1-cells outside the tree.
///
/// Tree cells vanish; a redundant 1-cell is traded for the rest of the
/// boundary of its collapsible partner, recursively. The gradient flow is
/// acyclic, so each redundant cell is expanded once and memoized.
class LoopNormalizer {
 public:
  LoopNormalizer(const CellComplex& cx, const GradientField& field, const SpanningTree& tree);

  /// Word of a closed path at the tree's base; InputError otherwise.
  CellWord normalize(const EdgePath& loop);
  /// Word of the forward traversal of one 1-cell.
  const CellWord& cell_word(int one_cell);

 private:
  const CellComplex& cx_;
  const GradientField& field_;
  const SpanningTree& tree_;
  std::vector<std::optional<CellWord>> memo_;
  std::vector<char> visiting_;
};

CellWord normalize_loop(const CellComplex& cx, const GradientField& field,
                        const SpanningTree& tree, const EdgePath& loop);

}  // namespace gbu
