#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gbu {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// An unordered vertex pair, stored with lo < hi.
struct Edge {
  Vertex lo = kNoVertex;
  Vertex hi = kNoVertex;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool contains(Vertex v) const { return v == lo || v == hi; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite graph that may carry loops and parallel edges.
///
/// The rotation of a vertex lists its neighbors in cyclic embedding order,
/// with repetitions for parallel edges; a loop contributes its vertex twice.
/// The k-th occurrence of w in rotation(v) is glued to the k-th occurrence of
/// v in rotation(w).
class MultiGraph {
 public:
  struct Link {
    Vertex u;
    Vertex v;  // u <= v
  };

  MultiGraph() = default;
  explicit MultiGraph(std::vector<std::vector<Vertex>> rotation,
                      std::vector<int> labels = {});

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(int id) const { return links_[id]; }
  /// Link ids incident to v, in rotation order (loops appear twice).
  const std::vector<int>& incident(Vertex v) const { return incident_[v]; }
  int label(Vertex v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  bool is_simplicial() const;
  bool is_connected() const;
  int euler_characteristic() const { return vertex_count() - link_count(); }

 private:
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<int> labels_;
  std::vector<Link> links_;
  std::vector<std::vector<int>> incident_;
};

/// Connected simplicial graph with a fixed planar-embedding rotation system.
class Graph {
 public:
  Graph() = default;
  /// Validates simpliciality, symmetry of the rotation and connectivity.
  explicit Graph(std::vector<std::vector<Vertex>> rotation,
                 std::vector<int> labels = {});

  static Graph from_multigraph(const MultiGraph& g);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return rotation_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted edge list; an edge's index in it is its link id in as_multigraph().
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> edge_index(Edge e) const;
  int label(Vertex v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }
  std::optional<Vertex> vertex_with_label(int label) const;
  int euler_characteristic() const { return vertex_count() - edge_count(); }
  int first_betti_number() const { return edge_count() - vertex_count() + 1; }

  MultiGraph as_multigraph() const;

 private:
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<int> labels_;
  std::vector<Edge> edges_;
};

/// Homeomorphic simplicial refinement: two new vertices per loop, one per
/// edge in each parallel class. Simplicial input comes back unchanged.
Graph subdivide_to_simplicial(const MultiGraph& g);

/// Rooted spanning tree, DFS numbering and deleted-edge bookkeeping.
///
/// Vertices are renumbered so that vertex i is the i-th vertex met by the
/// leftmost-first walk along the tree starting at the root 0; `label(v)`
/// recovers the input id.
class OrderedGraph {
 public:
  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int label(Vertex v) const { return graph_.label(v); }

  /// Tree parent tau(e_v) of v, kNoVertex for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  /// e_v = (parent(v), v).
  Edge tree_edge(Vertex v) const { return Edge{parent_[v], v}; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  bool is_tree_edge(Edge e) const;
  bool is_deleted(Edge e) const { return deleted_index(e).has_value(); }
  /// Deleted edges z_1..z_k sorted by larger endpoint (ties: larger x first).
  const std::vector<Edge>& deleted_edges() const { return deleted_; }
  /// 1-based position of e among the deleted edges.
  std::optional<int> deleted_index(Edge e) const;
  std::vector<Edge> tree_edges() const;
  bool tree_is_linear() const;

 private:
  friend OrderedGraph order_graph(const Graph&, std::optional<int>,
                                  const std::optional<std::vector<std::pair<int, int>>>&);
  Graph graph_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Edge> deleted_;
};

/// Orders `g` along a rooted maximal tree.
///
/// `root` and `tree` use input labels. Without a tree, the DFS tree in
/// embedding order is used; without a root, the first degree-1 vertex is
/// taken, else the first vertex that does not disconnect g.
OrderedGraph order_graph(const Graph& g, std::optional<int> root = std::nullopt,
                         const std::optional<std::vector<std::pair<int, int>>>& tree =
                             std::nullopt);

struct BranchVertex {
  Vertex v;
  Vertex v1;
  Vertex v2;
  friend bool operator==(const BranchVertex&, const BranchVertex&) = default;
};

/// Smallest vertex with two tree children, with its two smallest children.
std::optional<BranchVertex> essential_vertex(const OrderedGraph& og);

std::string to_string(const Edge& e);

}  // namespace gbu
