#include "gbu/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "gbu/errors.hpp"

namespace gbu {

namespace {

std::vector<int> default_labels(std::vector<int> labels, int n) {
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 0);
  }
  if (static_cast<int>(labels.size()) != n)
    throw InputError("label count does not match vertex count");
  std::set<int> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n) throw InputError("duplicate vertex label");
  return labels;
}

// Index of `w` in `rot`, searching from the front.
int position_of(const std::vector<Vertex>& rot, Vertex w) {
  auto it = std::find(rot.begin(), rot.end(), w);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

bool connected_from_zero(int n, const std::vector<std::vector<Vertex>>& adj) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : adj[x])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

}  // namespace

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")";
}

// ---------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(std::vector<std::vector<Vertex>> rotation, std::vector<int> labels)
    : rotation_(std::move(rotation)) {
  const int n = vertex_count();
  labels_ = default_labels(std::move(labels), n);
  for (const auto& rot : rotation_)
    for (Vertex w : rot)
      if (w < 0 || w >= n) throw InputError("neighbor index out of range");

  incident_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) incident_[v].assign(rotation_[v].size(), -1);

  // slots_[v][w] lists the positions of w inside rotation(v).
  std::vector<std::map<Vertex, std::vector<int>>> slots(n);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
      slots[v][rotation_[v][i]].push_back(i);

  for (Vertex v = 0; v < n; ++v) {
    for (const auto& [w, mine] : slots[v]) {
      if (w < v) continue;
      if (w == v) {
        if (mine.size() % 2 != 0)
          throw InputError("vertex " + std::to_string(labels_[v]) +
                           " lists itself an odd number of times");
        for (std::size_t i = 0; i < mine.size(); i += 2) {
          const int id = link_count();
          links_.push_back({v, v});
          incident_[v][mine[i]] = id;
          incident_[v][mine[i + 1]] = id;
        }
        continue;
      }
      const auto& theirs = slots[w][v];
      if (theirs.size() != mine.size())
        throw InputError("inconsistent adjacency between " + std::to_string(labels_[v]) +
                         " and " + std::to_string(labels_[w]));
      for (std::size_t i = 0; i < mine.size(); ++i) {
        const int id = link_count();
        links_.push_back({v, w});
        incident_[v][mine[i]] = id;
        incident_[w][theirs[i]] = id;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (const auto& [w, mine] : slots[v])
      if (w > v && slots[w].find(v) == slots[w].end())
        throw InputError("inconsistent adjacency between " + std::to_string(labels_[v]) +
                         " and " + std::to_string(labels_[w]));
}

bool MultiGraph::is_simplicial() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& l : links_) {
    if (l.u == l.v) return false;
    if (!seen.insert({l.u, l.v}).second) return false;
  }
  return true;
}

bool MultiGraph::is_connected() const {
  std::vector<std::vector<Vertex>> adj(vertex_count());
  for (const auto& l : links_) {
    adj[l.u].push_back(l.v);
    adj[l.v].push_back(l.u);
  }
  return connected_from_zero(vertex_count(), adj);
}

// --------------------------------------------------------------------- Graph

Graph::Graph(std::vector<std::vector<Vertex>> rotation, std::vector<int> labels)
    : rotation_(std::move(rotation)) {
  const int n = vertex_count();
  if (n == 0) throw InputError("graph is empty");
  labels_ = default_labels(std::move(labels), n);
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex w : rotation_[v]) {
      if (w < 0 || w >= n) throw InputError("neighbor index out of range");
      if (w == v)
        throw InputError("loop at vertex " + std::to_string(labels_[v]) +
                         " (graph must be simplicial)");
      if (!seen.insert(w).second)
        throw InputError("parallel edges between " + std::to_string(labels_[v]) + " and " +
                         std::to_string(labels_[w]) + " (graph must be simplicial)");
      if (position_of(rotation_[w], v) < 0)
        throw InputError("inconsistent adjacency: " + std::to_string(labels_[v]) + " lists " +
                         std::to_string(labels_[w]) + " but not conversely");
      if (v < w) edges_.push_back({v, w});
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (!connected_from_zero(n, rotation_)) throw InputError("graph is disconnected");
}

Graph Graph::from_multigraph(const MultiGraph& g) {
  std::vector<std::vector<Vertex>> rot;
  for (Vertex v = 0; v < g.vertex_count(); ++v) rot.push_back(g.rotation(v));
  return Graph(std::move(rot), g.labels());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return edge_index(Edge::of(u, v)).has_value();
}

std::optional<int> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<Vertex> Graph::vertex_with_label(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

MultiGraph Graph::as_multigraph() const {
  // Link ids must follow the sorted edge list, which is the order
  // MultiGraph assigns them in (by smaller endpoint, then larger).
  return MultiGraph(rotation_, labels_);
}

Graph subdivide_to_simplicial(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw InputError("graph is empty");
  if (!g.is_connected()) throw InputError("graph is disconnected");
  if (g.is_simplicial()) return Graph::from_multigraph(g);

  std::map<std::pair<Vertex, Vertex>, int> multiplicity;
  for (const auto& l : g.links()) ++multiplicity[{l.u, l.v}];

  std::vector<std::vector<Vertex>> rot;
  for (Vertex v = 0; v < g.vertex_count(); ++v) rot.push_back(g.rotation(v));
  std::vector<int> labels = g.labels();
  int next_label = *std::max_element(labels.begin(), labels.end()) + 1;
  auto new_vertex = [&](std::vector<Vertex> nbrs) {
    rot.push_back(std::move(nbrs));
    labels.push_back(next_label++);
    return static_cast<Vertex>(rot.size() - 1);
  };

  // Each link owns its own slots, so rewriting them never collides.
  for (int id = 0; id < g.link_count(); ++id) {
    const auto& l = g.link(id);
    std::vector<std::pair<Vertex, int>> ends;  // (vertex, slot)
    auto collect = [&](Vertex x) {
      const auto& inc = g.incident(x);
      for (int i = 0; i < static_cast<int>(inc.size()); ++i)
        if (inc[i] == id) ends.push_back({x, i});
    };
    collect(l.u);
    if (l.u != l.v) collect(l.v);
    if (l.u == l.v) {
      // ends holds the loop's two slots at the same vertex.
      const Vertex v = l.u;
      const Vertex a = new_vertex({v, kNoVertex});
      const Vertex b = new_vertex({a, v});
      rot[a][1] = b;
      rot[v][ends[0].second] = a;
      rot[v][ends[1].second] = b;
    } else if (multiplicity[{l.u, l.v}] > 1) {
      const Vertex m = new_vertex({l.u, l.v});
      rot[l.u][ends[0].second] = m;
      rot[l.v][ends[1].second] = m;
    }
  }
  return Graph(std::move(rot), std::move(labels));
}

// -------------------------------------------------------------- OrderedGraph

namespace {

// Neighbors of x from `adj` that satisfy `keep`, in cyclic order starting
// right after `from` (or at the front when from == kNoVertex).
template <class Keep>
std::vector<Vertex> cyclic_after(const std::vector<Vertex>& rot, Vertex from, Keep keep) {
  const int d = static_cast<int>(rot.size());
  int start = 0;
  if (from != kNoVertex) start = position_of(rot, from) + 1;
  std::vector<Vertex> out;
  for (int i = 0; i < d; ++i) {
    Vertex w = rot[(start + i) % d];
    if (w != from && keep(w)) out.push_back(w);
  }
  return out;
}

bool is_cut_vertex(const Graph& g, Vertex x) {
  const int n = g.vertex_count();
  if (n <= 2) return false;
  Vertex start = x == 0 ? 1 : 0;
  std::vector<char> seen(n, 0);
  seen[x] = 1;
  seen[start] = 1;
  std::vector<Vertex> stack{start};
  int count = 1;
  while (!stack.empty()) {
    Vertex y = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(y))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count != n - 1;
}

std::set<Edge> dfs_tree(const Graph& g, Vertex root) {
  std::set<Edge> tree;
  std::vector<char> seen(g.vertex_count(), 0);
  struct Frame {
    Vertex x;
    std::vector<Vertex> order;
    std::size_t next = 0;
  };
  seen[root] = 1;
  std::vector<Frame> stack;
  stack.push_back({root, cyclic_after(g.neighbors(root), kNoVertex, [](Vertex) { return true; })});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.order.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = f.order[f.next++];
    if (seen[w]) continue;
    seen[w] = 1;
    tree.insert(Edge::of(f.x, w));
    Vertex x = f.x;
    stack.push_back({w, cyclic_after(g.neighbors(w), x, [](Vertex) { return true; })});
  }
  return tree;
}

}  // namespace

bool OrderedGraph::is_tree_edge(Edge e) const {
  return e.hi >= 0 && e.hi < vertex_count() && parent_[e.hi] == e.lo;
}

std::optional<int> OrderedGraph::deleted_index(Edge e) const {
  for (std::size_t i = 0; i < deleted_.size(); ++i)
    if (deleted_[i] == e) return static_cast<int>(i) + 1;
  return std::nullopt;
}

std::vector<Edge> OrderedGraph::tree_edges() const {
  std::vector<Edge> out;
  for (Vertex v = 1; v < vertex_count(); ++v) out.push_back(tree_edge(v));
  return out;
}

bool OrderedGraph::tree_is_linear() const {
  return std::all_of(children_.begin(), children_.end(),
                     [](const auto& c) { return c.size() <= 1; });
}

OrderedGraph order_graph(const Graph& g, std::optional<int> root_label,
                         const std::optional<std::vector<std::pair<int, int>>>& tree_labels) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("graph needs at least two vertices to have a degree-1 root");

  Vertex root = kNoVertex;
  if (root_label) {
    auto r = g.vertex_with_label(*root_label);
    if (!r) throw InputError("root " + std::to_string(*root_label) + " is not a vertex");
    root = *r;
  } else if (tree_labels) {
    // First vertex with a single tree edge.
    std::vector<int> deg(n, 0);
    for (auto [a, b] : *tree_labels) {
      auto u = g.vertex_with_label(a), v = g.vertex_with_label(b);
      if (u) ++deg[*u];
      if (v) ++deg[*v];
    }
    for (Vertex v = 0; v < n && root == kNoVertex; ++v)
      if (deg[v] == 1) root = v;
    if (root == kNoVertex) throw InputError("proposed tree has no leaf");
  } else {
    for (Vertex v = 0; v < n && root == kNoVertex; ++v)
      if (g.degree(v) == 1) root = v;
    for (Vertex v = 0; v < n && root == kNoVertex; ++v)
      if (!is_cut_vertex(g, v)) root = v;
  }

  std::set<Edge> tree;
  if (tree_labels) {
    for (auto [a, b] : *tree_labels) {
      auto u = g.vertex_with_label(a), v = g.vertex_with_label(b);
      if (!u || !v || !g.adjacent(*u, *v))
        throw InputError("tree edge " + std::to_string(a) + "-" + std::to_string(b) +
                         " is not an edge of the graph");
      tree.insert(Edge::of(*u, *v));
    }
    if (static_cast<int>(tree.size()) != n - 1)
      throw InputError("proposed tree has " + std::to_string(tree.size()) + " edges, expected " +
                       std::to_string(n - 1));
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const auto& e : tree) {
      int a = find(e.lo), b = find(e.hi);
      if (a == b) throw InputError("proposed tree contains a cycle");
      comp[a] = b;
    }
  } else {
    tree = dfs_tree(g, root);
  }

  auto in_tree = [&](Vertex x, Vertex w) { return tree.count(Edge::of(x, w)) > 0; };
  int root_degree = 0;
  for (Vertex w : g.neighbors(root)) root_degree += in_tree(root, w);
  if (root_degree != 1)
    throw InputError("root " + std::to_string(g.label(root)) + " has degree " +
                     std::to_string(root_degree) + " in the maximal tree; a degree-1 root is required");

  // Leftmost-first walk along the tree.
  std::vector<Vertex> number(n, kNoVertex);
  std::vector<Vertex> old_parent(n, kNoVertex);
  std::vector<Vertex> walk;
  {
    struct Frame {
      Vertex x;
      std::vector<Vertex> kids;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    auto enter = [&](Vertex x, Vertex from) {
      number[x] = static_cast<Vertex>(walk.size());
      walk.push_back(x);
      old_parent[x] = from;
      stack.push_back({x, cyclic_after(g.neighbors(x), from,
                                       [&](Vertex w) { return in_tree(x, w); })});
    };
    enter(root, kNoVertex);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.kids.size()) {
        stack.pop_back();
        continue;
      }
      Vertex w = f.kids[f.next++];
      enter(w, f.x);
    }
  }

  OrderedGraph og;
  std::vector<std::vector<Vertex>> rot(n);
  std::vector<int> labels(n);
  for (Vertex old = 0; old < n; ++old) {
    for (Vertex w : g.neighbors(old)) rot[number[old]].push_back(number[w]);
    labels[number[old]] = g.label(old);
  }
  og.graph_ = Graph(std::move(rot), std::move(labels));
  og.parent_.assign(n, kNoVertex);
  og.children_.assign(n, {});
  for (Vertex old = 0; old < n; ++old)
    if (old_parent[old] != kNoVertex) {
      og.parent_[number[old]] = number[old_parent[old]];
      og.children_[number[old_parent[old]]].push_back(number[old]);
    }
  for (auto& c : og.children_) std::sort(c.begin(), c.end());
  for (const Edge& e : og.graph_.edges())
    if (!og.is_tree_edge(e)) og.deleted_.push_back(e);
  std::sort(og.deleted_.begin(), og.deleted_.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(a.hi, -a.lo) < std::tuple(b.hi, -b.lo);
  });
  for (const Edge& e : og.deleted_)
    if (!(e.lo + 1 < e.hi))
      throw InputError("deleted edge " + to_string(e) +
                       " violates x+1 < y; subdivide it (insert a vertex) or choose another tree");
  return og;
}

std::optional<BranchVertex> essential_vertex(const OrderedGraph& og) {
  for (Vertex v = 0; v < og.vertex_count(); ++v) {
    const auto& c = og.children(v);
    if (c.size() >= 2) return BranchVertex{v, c[0], c[1]};
  }
  return std::nullopt;
}

}  // namespace gbu
