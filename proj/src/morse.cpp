#include "gbu/morse.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "gbu/errors.hpp"

namespace gbu {

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::critical: return "critical";
    case CellStatus::redundant: return "redundant";
    case CellStatus::collapsible: return "collapsible";
  }
  return "?";
}

std::string to_string(const CellWord& w) {
  return format_word(w, [](const ConfigCell& c) { return to_string(c); });
}

// ------------------------------------------------------------ classification

bool vertex_ingredient_critical(const OrderedGraph& og, const ConfigCell& c, int slot) {
  const Vertex v = c.ing[slot].lo;
  if (v == 0) return true;
  return c.ing[1 - slot].contains(og.parent(v));
}

bool edge_ingredient_critical(const OrderedGraph& og, const ConfigCell& c, int slot) {
  const Edge e = c.ing[slot].as_edge();
  if (og.is_deleted(e)) return true;
  const GCell other = c.ing[1 - slot];
  if (!other.is_vertex()) return false;
  const Vertex u = other.lo;
  return og.graph().adjacent(u, e.lo) && e.lo < u && u < e.hi;
}

namespace {

bool is_gcell(const OrderedGraph& og, const GCell& x) {
  const int n = og.vertex_count();
  if (x.lo < 0 || x.lo >= n) return false;
  if (x.is_vertex()) return true;
  return x.lo < x.hi && x.hi < n && og.graph().adjacent(x.lo, x.hi);
}

bool ingredient_critical(const OrderedGraph& og, const ConfigCell& c, int slot) {
  return c.ing[slot].is_vertex() ? vertex_ingredient_critical(og, c, slot)
                                 : edge_ingredient_critical(og, c, slot);
}

}  // namespace

Classification classify_cell(const OrderedGraph& og, const ConfigCell& raw) {
  const ConfigCell c =
      raw.is_ordered() ? raw : ConfigCell::unordered(raw.ing[0], raw.ing[1]);
  if (!is_gcell(og, c.ing[0]) || !is_gcell(og, c.ing[1]) || !c.valid())
    throw InputError(to_string(raw) + " is not a cell of the configuration complex");

  int pick = -1;
  for (int slot = 0; slot < 2; ++slot) {
    if (ingredient_critical(og, c, slot)) continue;
    if (pick < 0 || c.ing[slot].order_key() < c.ing[pick].order_key()) pick = slot;
  }
  if (pick < 0) return {CellStatus::critical, std::nullopt};

  const GCell x = c.ing[pick];
  if (x.is_vertex())
    return {CellStatus::redundant, c.with(pick, GCell::edge(og.tree_edge(x.lo)))};
  return {CellStatus::collapsible, c.with(pick, GCell::vertex(x.hi))};
}

// ------------------------------------------------------------ gradient field

std::vector<int> GradientField::critical_cells(int dim) const {
  std::vector<int> out;
  for (int id = 0; id < size(); ++id)
    if (status_[id] == CellStatus::critical && dims_[id] == dim) out.push_back(id);
  return out;
}

std::array<int, 3> GradientField::critical_counts() const {
  std::array<int, 3> c{0, 0, 0};
  for (int id = 0; id < size(); ++id)
    if (status_[id] == CellStatus::critical) ++c[dims_[id]];
  return c;
}

GradientField build_field(const OrderedGraph& og, const CellComplex& cx) {
  GradientField f;
  const int n = cx.size();
  f.status_.resize(n);
  f.partner_.assign(n, -1);
  f.dims_.resize(n);
  for (int id = 0; id < n; ++id) {
    const Classification cl = classify_cell(og, cx.cell(id));
    f.status_[id] = cl.status;
    f.dims_[id] = cx.cell(id).dim();
    if (cl.partner) {
      auto p = cx.find(*cl.partner);
      if (!p)
        throw InternalError("partner " + to_string(*cl.partner) + " of " +
                            to_string(cx.cell(id)) + " is not a cell");
      f.partner_[id] = *p;
    }
  }
  for (int id = 0; id < n; ++id) {
    const int p = f.partner_[id];
    if (p < 0) continue;
    const CellStatus expected =
        f.status_[id] == CellStatus::redundant ? CellStatus::collapsible : CellStatus::redundant;
    const int expected_dim = cx.cell(id).dim() + (f.status_[id] == CellStatus::redundant ? 1 : -1);
    if (f.partner_[p] != id || f.status_[p] != expected || cx.cell(p).dim() != expected_dim)
      throw InternalError("matching is not well formed at " + to_string(cx.cell(id)) + " <-> " +
                          to_string(cx.cell(p)));
  }
  if (!modified_hasse_is_acyclic(cx, f))
    throw InternalError("modified Hasse diagram has a directed cycle");
  return f;
}

bool modified_hasse_is_acyclic(const CellComplex& cx, const GradientField& field) {
  const int n = cx.size();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (int id = 0; id < n; ++id)
    for (int face : cx.faces(id)) {
      const bool matched = field.partner(face) == id && field.status(face) == CellStatus::redundant;
      if (matched) {
        out[face].push_back(id);
        ++indegree[id];
      } else {
        out[id].push_back(face);
        ++indegree[face];
      }
    }
  std::deque<int> ready;
  for (int id = 0; id < n; ++id)
    if (indegree[id] == 0) ready.push_back(id);
  int seen = 0;
  while (!ready.empty()) {
    const int x = ready.front();
    ready.pop_front();
    ++seen;
    for (int y : out[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  return seen == n;
}

std::string census_report(std::string_view name, const CellComplex& cx,
                          const GradientField& field) {
  std::ostringstream out;
  const auto cells = cx.counts();
  const auto crit = field.critical_counts();
  out << name << " cells: dim0=" << cells[0] << ", dim1=" << cells[1] << ", dim2=" << cells[2]
      << "\n";
  out << name << " euler: " << cx.euler_characteristic() << "\n";
  const int comps = cx.component_count();
  if (comps == 1)
    out << name << " connected\n";
  else
    out << name << " disconnected, " << comps << " components\n";
  out << name << " critical: dim0=" << crit[0] << ", dim1=" << crit[1] << ", dim2=" << crit[2]
      << "\n";
  for (int d = 0; d < 3; ++d)
    for (int id : field.critical_cells(d))
      out << name << " critical cell: " << to_string(cx.cell(id)) << ":" << d << "\n";
  return out.str();
}

// ----------------------------------------------------------- trees and paths

ConfigCell select_connecting_cell(const OrderedGraph& og) {
  ConfigCell cell;
  if (auto ev = essential_vertex(og)) {
    cell = ConfigCell::ordered(GCell::vertex(ev->v1), GCell::edge(ev->v, ev->v2));
  } else if (!og.deleted_edges().empty()) {
    const Edge z1 = og.deleted_edges().front();
    cell = ConfigCell::ordered(GCell::vertex(z1.lo + 1), GCell::edge(z1));
  } else {
    throw InputError("graph is homeomorphic to an interval: D2(G) is disconnected");
  }
  const Vertex a = cell.ing[0].lo, b = cell.ing[1].lo, c = cell.ing[1].hi;
  if (!(b < a && a < c) || classify_cell(og, cell).status != CellStatus::critical)
    throw InternalError("connecting cell " + to_string(cell) + " is not a critical (a,(b,c))");
  return cell;
}

SpanningTree::SpanningTree(const CellComplex& cx, const std::vector<int>& tree_cells, int base)
    : base_(base), in_tree_(cx.size(), 0), arrival_(cx.size()), source_(cx.size(), -1) {
  std::vector<std::vector<EdgeStep>> adj(cx.size());
  for (int e : tree_cells) {
    in_tree_[e] = 1;
    adj[cx.initial(e)].push_back({e, true});
    adj[cx.terminal(e)].push_back({e, false});
  }
  std::vector<char> seen(cx.size(), 0);
  std::deque<int> queue{base};
  seen[base] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const EdgeStep& s : adj[x]) {
      const int y = cx.step_target(s);
      if (seen[y]) continue;
      seen[y] = 1;
      ++reached;
      arrival_[y] = s;
      source_[y] = x;
      queue.push_back(y);
    }
  }
  const int zero_cells = static_cast<int>(cx.cells_of_dim(0).size());
  if (reached != zero_cells || static_cast<int>(tree_cells.size()) != zero_cells - 1)
    throw InternalError("collapsible cells do not span a tree (" + std::to_string(reached) + " of " +
                        std::to_string(zero_cells) + " 0-cells reached, " +
                        std::to_string(tree_cells.size()) + " edges)");
}

EdgePath SpanningTree::beta(int zero_cell) const {
  EdgePath p;
  p.start = base_;
  for (int x = zero_cell; x != base_; x = source_[x]) p.steps.push_back(*arrival_[x]);
  std::reverse(p.steps.begin(), p.steps.end());
  return p;
}

CollapsedTrees build_trees(const OrderedGraph& og, const CellComplex& ordered,
                           const GradientField& ordered_field, const CellComplex& unordered,
                           const GradientField& unordered_field, const ConfigCell& connecting) {
  if (og.deleted_edges().empty() && og.tree_is_linear())
    throw InputError("graph is homeomorphic to an interval: D2(G) is disconnected");

  auto collapsible_edges = [](const CellComplex& cx, const GradientField& f) {
    std::vector<int> out;
    for (int e : cx.cells_of_dim(1))
      if (f.status(e) == CellStatus::collapsible) out.push_back(e);
    return out;
  };

  CollapsedTrees t;
  const int base_u = unordered.id_of(ConfigCell::unordered(GCell::vertex(0), GCell::vertex(1)));
  t.udt = SpanningTree(unordered, collapsible_edges(unordered, unordered_field), base_u);

  auto up = [&](int zero_cell) {
    const ConfigCell& c = ordered.cell(zero_cell);
    return c.ing[0].lo < c.ing[1].lo;
  };
  for (int v : ordered.cells_of_dim(0)) (up(v) ? t.dt_up : t.dt_down).push_back(v);
  std::vector<int> df = collapsible_edges(ordered, ordered_field);
  for (int e : df)
    if (up(ordered.initial(e)) != up(ordered.terminal(e)))
      throw InternalError("collapsible cell " + to_string(ordered.cell(e)) +
                          " joins the two halves of DF");

  t.connecting = ordered.id_of(connecting);
  if (ordered_field.status(t.connecting) != CellStatus::critical)
    throw InternalError("connecting cell " + to_string(connecting) + " is not critical");
  df.push_back(t.connecting);
  const int base_o = ordered.id_of(ConfigCell::ordered(GCell::vertex(0), GCell::vertex(1)));
  // Spanning with |DF| + 1 edges forces DF to have exactly two components.
  t.dt = SpanningTree(ordered, df, base_o);
  return t;
}

// ------------------------------------------------------------- normalization

LoopNormalizer::LoopNormalizer(const CellComplex& cx, const GradientField& field,
                               const SpanningTree& tree)
    : cx_(cx), field_(field), tree_(tree), memo_(cx.size()), visiting_(cx.size(), 0) {}

const CellWord& LoopNormalizer::cell_word(int e) {
  if (memo_[e]) return *memo_[e];
  CellWord w;
  if (tree_.contains(e) || field_.status(e) == CellStatus::collapsible) {
    // trivial
  } else if (field_.status(e) == CellStatus::critical) {
    w = CellWord::generator(cx_.cell(e));
  } else {
    if (visiting_[e])
      throw InternalError("gradient flow revisits " + to_string(cx_.cell(e)));
    visiting_[e] = 1;
    const EdgePath boundary = cx_.boundary_loop(field_.partner(e));
    const auto& steps = boundary.steps;
    const auto at = std::find_if(steps.begin(), steps.end(),
                                 [&](const EdgeStep& s) { return s.cell == e; });
    const std::size_t i = static_cast<std::size_t>(at - steps.begin());
    // r^s * (rest of the boundary) = 1
    CellWord rest;
    for (std::size_t k = 1; k < steps.size(); ++k) {
      const EdgeStep& s = steps[(i + k) % steps.size()];
      const CellWord& part = cell_word(s.cell);
      rest *= s.forward ? part : part.inverse();
    }
    w = at->forward ? rest.inverse() : rest;
    visiting_[e] = 0;
  }
  memo_[e] = std::move(w);
  return *memo_[e];
}

CellWord LoopNormalizer::normalize(const EdgePath& loop) {
  if (loop.start != tree_.base() || cx_.endpoint(loop) != tree_.base())
    throw InputError("loop is not closed at the base point");
  CellWord out;
  for (const EdgeStep& s : loop.steps) {
    const CellWord& w = cell_word(s.cell);
    out *= s.forward ? w : w.inverse();
  }
  return out;
}

CellWord normalize_loop(const CellComplex& cx, const GradientField& field,
                        const SpanningTree& tree, const EdgePath& loop) {
  return LoopNormalizer(cx, field, tree).normalize(loop);
}

}  // namespace gbu
