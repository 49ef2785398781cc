#include "gbu/config_complex.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "gbu/errors.hpp"

namespace gbu {

ConfigCell ConfigCell::with(int slot, GCell c) const {
  ConfigCell out = *this;
  out.ing[slot] = c;
  if (kind == CellKind::unordered) return unordered(out.ing[0], out.ing[1]);
  return out;
}

ConfigCell project(const ConfigCell& c) { return ConfigCell::unordered(c.ing[0], c.ing[1]); }

std::string to_string(const GCell& c) {
  if (c.is_vertex()) return std::to_string(c.lo);
  return to_string(c.as_edge());
}

std::string to_string(const ConfigCell& c) {
  const char* open = c.is_ordered() ? "(" : "{";
  const char* close = c.is_ordered() ? ")" : "}";
  return open + to_string(c.ing[0]) + "," + to_string(c.ing[1]) + close;
}

EdgePath EdgePath::reversed(const CellComplex& cx) const {
  EdgePath out;
  out.start = cx.endpoint(*this);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.steps.push_back({it->cell, !it->forward});
  return out;
}

EdgePath& EdgePath::append(const EdgePath& other) {
  if (start < 0) start = other.start;
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  return *this;
}

namespace {

bool cell_less(const ConfigCell& a, const ConfigCell& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

}  // namespace

std::optional<int> CellComplex::find(const ConfigCell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c, cell_less);
  if (it == cells_.end() || *it != c) return std::nullopt;
  return static_cast<int>(it - cells_.begin());
}

int CellComplex::id_of(const ConfigCell& c) const {
  auto id = find(c);
  if (!id) throw InputError(to_string(c) + " is not a cell of the complex");
  return *id;
}

std::array<int, 3> CellComplex::counts() const {
  return {static_cast<int>(by_dim_[0].size()), static_cast<int>(by_dim_[1].size()),
          static_cast<int>(by_dim_[2].size())};
}

int CellComplex::euler_characteristic() const {
  auto c = counts();
  return c[0] - c[1] + c[2];
}

int CellComplex::endpoint(const EdgePath& p) const {
  int at = p.start;
  for (const auto& s : p.steps) {
    if (step_source(s) != at)
      throw InputError("path is not connected at " + to_string(cell(s.cell)));
    at = step_target(s);
  }
  return at;
}

int CellComplex::component_count() const {
  const int n = size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(by_dim_[0].size());
  for (int e : by_dim_[1]) {
    int a = root(initial(e)), b = root(terminal(e));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

EdgePath CellComplex::boundary_loop(int two_cell) const {
  const ConfigCell& c = cells_[two_cell];
  // (e1,f1) -> (e2,f1) -> (e2,f2) -> (e1,f2) -> (e1,f1)
  const GCell e = c.ing[0], f = c.ing[1];
  const GCell e1 = GCell::vertex(e.lo), e2 = GCell::vertex(e.hi);
  const GCell f1 = GCell::vertex(f.lo), f2 = GCell::vertex(f.hi);
  auto make = [&](GCell x, GCell y) {
    return id_of(c.is_ordered() ? ConfigCell::ordered(x, y) : ConfigCell::unordered(x, y));
  };
  EdgePath p;
  p.start = make(e1, f1);
  p.steps = {{make(e, f1), true}, {make(e2, f), true}, {make(e, f2), false}, {make(e1, f), false}};
  return p;
}

std::vector<std::string> CellComplex::dump_lines() const {
  std::vector<std::string> lines;
  for (const auto& c : cells_) lines.push_back(to_string(c) + ":" + std::to_string(c.dim()));
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string CellComplex::dump() const {
  std::string out;
  for (const auto& l : dump_lines()) out += l + "\n";
  return out;
}

CellComplex build_complex(const OrderedGraph& og, CellKind kind) {
  const Graph& g = og.graph();
  std::vector<GCell> gcells;
  for (Vertex v = 0; v < g.vertex_count(); ++v) gcells.push_back(GCell::vertex(v));
  for (const Edge& e : g.edges()) gcells.push_back(GCell::edge(e));

  CellComplex cx;
  cx.kind_ = kind;
  for (std::size_t i = 0; i < gcells.size(); ++i)
    for (std::size_t j = 0; j < gcells.size(); ++j) {
      if (i == j || !gcells[i].disjoint(gcells[j])) continue;
      if (kind == CellKind::ordered)
        cx.cells_.push_back(ConfigCell::ordered(gcells[i], gcells[j]));
      else if (gcells[i] < gcells[j])
        cx.cells_.push_back(ConfigCell::unordered(gcells[i], gcells[j]));
    }
  std::sort(cx.cells_.begin(), cx.cells_.end(), cell_less);

  const int n = cx.size();
  cx.faces_.assign(n, {});
  cx.cofaces_.assign(n, {});
  cx.ends_.assign(n, {-1, -1});
  for (int id = 0; id < n; ++id) {
    const ConfigCell& c = cx.cells_[id];
    cx.by_dim_[c.dim()].push_back(id);
    for (int slot = 0; slot < 2; ++slot) {
      const GCell x = c.ing[slot];
      if (!x.is_edge()) continue;
      const int lo = cx.id_of(c.with(slot, GCell::vertex(x.lo)));
      const int hi = cx.id_of(c.with(slot, GCell::vertex(x.hi)));
      cx.faces_[id].push_back(lo);
      cx.faces_[id].push_back(hi);
      if (c.dim() == 1) cx.ends_[id] = {lo, hi};
    }
    for (int f : cx.faces_[id]) cx.cofaces_[f].push_back(id);
  }
  return cx;
}

EdgePath project_path(const CellComplex& ordered, const CellComplex& unordered,
                      const EdgePath& p) {
  EdgePath out;
  out.start = unordered.id_of(project(ordered.cell(p.start)));
  for (const auto& s : p.steps)
    out.steps.push_back({unordered.id_of(project(ordered.cell(s.cell))), s.forward});
  return out;
}

EdgePath lift_path(const CellComplex& unordered, const CellComplex& ordered, const EdgePath& p,
                   int start) {
  if (project(ordered.cell(start)) != unordered.cell(p.start))
    throw InputError("lift start " + to_string(ordered.cell(start)) + " does not lie over " +
                     to_string(unordered.cell(p.start)));
  EdgePath out;
  out.start = start;
  int at = start;
  for (const auto& s : p.steps) {
    const ConfigCell& u = unordered.cell(s.cell);
    int chosen = -1;
    for (const ConfigCell& lift :
         {ConfigCell::ordered(u.ing[0], u.ing[1]), ConfigCell::ordered(u.ing[1], u.ing[0])}) {
      const int id = ordered.id_of(lift);
      if (ordered.step_source({id, s.forward}) == at) chosen = id;
    }
    if (chosen < 0)
      throw InputError("path is not connected at " + to_string(u));
    out.steps.push_back({chosen, s.forward});
    at = ordered.step_target({chosen, s.forward});
  }
  return out;
}

}  // namespace gbu
