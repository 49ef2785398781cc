#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbu/graph.hpp"

namespace gbu {

/// A closed cell of G: a vertex (hi == kNoVertex) or an edge lo < hi.
struct GCell {
  Vertex lo = kNoVertex;
  Vertex hi = kNoVertex;

  static GCell vertex(Vertex v) { return {v, kNoVertex}; }
  static GCell edge(Vertex a, Vertex b) { return a < b ? GCell{a, b} : GCell{b, a}; }
  static GCell edge(Edge e) { return {e.lo, e.hi}; }

  bool is_vertex() const { return hi == kNoVertex; }
  bool is_edge() const { return hi != kNoVertex; }
  int dim() const { return is_edge() ? 1 : 0; }
  Edge as_edge() const { return {lo, hi}; }
  bool contains(Vertex v) const { return v == lo || (is_edge() && v == hi); }
  bool disjoint(const GCell& o) const {
    return !o.contains(lo) && !(is_edge() && o.contains(hi));
  }
  /// Position in the vertex/edge order: v for a vertex, the source v for e_v.
  Vertex order_key() const { return is_vertex() ? lo : hi; }

  friend bool operator==(const GCell&, const GCell&) = default;
  // Vertices first, then edges; lexicographic within each kind.
  friend auto operator<=>(const GCell& a, const GCell& b) {
    if (auto c = a.is_edge() <=> b.is_edge(); c != 0) return c;
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    return a.hi <=> b.hi;
  }
};

enum class CellKind { ordered, unordered };

/// Cell of D2(G) (ordered pair) or UD2(G) (canonically sorted pair).
struct ConfigCell {
  CellKind kind = CellKind::ordered;
  std::array<GCell, 2> ing{};

  static ConfigCell ordered(GCell a, GCell b) { return {CellKind::ordered, {a, b}}; }
  static ConfigCell unordered(GCell a, GCell b) {
    if (b < a) std::swap(a, b);
    return {CellKind::unordered, {a, b}};
  }

  bool is_ordered() const { return kind == CellKind::ordered; }
  int dim() const { return ing[0].dim() + ing[1].dim(); }
  bool valid() const { return ing[0].disjoint(ing[1]); }
  /// Same cell with one ingredient replaced (re-canonicalized if unordered).
  ConfigCell with(int slot, GCell c) const;
  ConfigCell swapped() const { return ordered(ing[1], ing[0]); }

  friend bool operator==(const ConfigCell&, const ConfigCell&) = default;
  friend auto operator<=>(const ConfigCell&, const ConfigCell&) = default;
};

/// The orbit map D2(G) -> UD2(G).
ConfigCell project(const ConfigCell& c);

std::string to_string(const GCell& c);
/// `(2,(1,3))` for ordered cells, `{2,(1,3)}` for unordered ones.
std::string to_string(const ConfigCell& c);

class CellComplex;

/// One traversal of a 1-cell: forward runs from its initial to its terminal 0-cell.
struct EdgeStep {
  int cell;
  bool forward;
  friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

/// Edge path in the 1-skeleton of a CellComplex, given by cell ids.
struct EdgePath {
  int start = -1;
  std::vector<EdgeStep> steps;

  EdgePath reversed(const CellComplex& cx) const;
  EdgePath& append(const EdgePath& other);
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Abrams' discrete model as an explicit cell poset.
///
/// Cell ids are positions in (dim, ConfigCell) order, so they are stable
/// for a given ordered graph.
class CellComplex {
 public:
  CellKind kind() const { return kind_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const ConfigCell& cell(int id) const { return cells_[id]; }
  std::optional<int> find(const ConfigCell& c) const;
  /// Like find, but throws InputError when c is not a cell of the complex.
  int id_of(const ConfigCell& c) const;
  std::span<const int> cells_of_dim(int d) const { return by_dim_[d]; }
  std::array<int, 3> counts() const;
  int euler_characteristic() const;

  /// Codimension-one faces (Hasse down-arrows).
  std::span<const int> faces(int id) const { return faces_[id]; }
  std::span<const int> cofaces(int id) const { return cofaces_[id]; }

  /// Endpoints of a 1-cell under the edge-ingredient orientation.
  int initial(int one_cell) const { return ends_[one_cell][0]; }
  int terminal(int one_cell) const { return ends_[one_cell][1]; }
  int step_source(EdgeStep s) const { return s.forward ? initial(s.cell) : terminal(s.cell); }
  int step_target(EdgeStep s) const { return s.forward ? terminal(s.cell) : initial(s.cell); }
  /// End 0-cell of p; throws InputError if consecutive steps do not meet.
  int endpoint(const EdgePath& p) const;
  int component_count() const;

  /// Boundary of a 2-cell as a closed 4-step path.
  EdgePath boundary_loop(int two_cell) const;

  std::vector<std::string> dump_lines() const;
  std::string dump() const;

 private:
  friend CellComplex build_complex(const OrderedGraph& og, CellKind kind);
  CellKind kind_ = CellKind::ordered;
  std::vector<ConfigCell> cells_;
  std::array<std::vector<int>, 3> by_dim_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> cofaces_;
  std::vector<std::array<int, 2>> ends_;
};

CellComplex build_complex(const OrderedGraph& og, CellKind kind);
inline CellComplex build_ordered(const OrderedGraph& og) {
  return build_complex(og, CellKind::ordered);
}
inline CellComplex build_unordered(const OrderedGraph& og) {
  return build_complex(og, CellKind::unordered);
}

/// Image of an ordered path under the covering map.
EdgePath project_path(const CellComplex& ordered, const CellComplex& unordered,
                      const EdgePath& p);

/// Unique lift of an unordered path starting at the ordered 0-cell `start`.
EdgePath lift_path(const CellComplex& unordered, const CellComplex& ordered,
                   const EdgePath& p, int start);

}  // namespace gbu
