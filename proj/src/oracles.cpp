#include "gbu/oracles.hpp"

#include <algorithm>
#include <functional>

#include "gbu/errors.hpp"

namespace gbu::oracle {

EdgePath represent_word(const BraidModel& m, const CellWord& w) {
  const CellComplex& ordered = m.ordered();
  const CellComplex& unordered = m.unordered();
  const bool is_ordered = w.empty() || w.letters().front().gen.is_ordered();
  const CellComplex& cx = is_ordered ? ordered : unordered;
  const SpanningTree& tree = is_ordered ? m.trees().dt : m.trees().udt;
  EdgePath path;
  path.start = tree.base();
  for (const auto& l : w) {
    if (l.gen.is_ordered() != is_ordered) throw InputError("word mixes ordered and unordered cells");
    const auto id = cx.find(l.gen);
    if (id && tree.contains(*id)) continue;
    EdgePath loop = represent(m, l.gen);
    path.append(l.exp > 0 ? loop : loop.reversed(cx));
  }
  return path;
}

CellWord iota_by_projection(const BraidModel& m, const CellWord& p2_word) {
  const EdgePath loop = project_path(m.ordered(), m.unordered(), represent_word(m, p2_word));
  return normalize_loop(m.unordered(), m.unordered_field(), m.trees().udt, loop);
}

EdgePath lift_word(const BraidModel& m, const CellWord& b2_word) {
  const EdgePath loop = represent_word(m, b2_word);
  if (b2_word.empty()) return EdgePath{m.trees().dt.base(), {}};
  return lift_path(m.unordered(), m.ordered(), loop, m.trees().dt.base());
}

int theta_by_lifting(const BraidModel& m, const CellWord& b2_word) {
  const EdgePath lifted = lift_word(m, b2_word);
  return m.ordered().endpoint(lifted) == lifted.start ? 0 : 1;
}

ZWord p1_by_first_coordinate(const BraidModel& m, const CellWord& p2_word) {
  const EdgePath loop = represent_word(m, p2_word);
  const auto& z = m.graph().deleted_edges();
  ZWord out;
  for (const auto& s : loop.steps) {
    const GCell first = m.ordered().cell(s.cell).ing[0];
    if (first.is_vertex()) continue;
    const auto it = std::find(z.begin(), z.end(), first.as_edge());
    if (it == z.end()) continue;
    out *= ZWord::generator(ZGen{static_cast<int>(it - z.begin()) + 1}, s.forward ? 1 : -1);
  }
  return out;
}

bool hasse_acyclic_by_dfs(const CellComplex& cx, const GradientField& field) {
  // Arrows: x -> face y, reversed to y -> x when y is matched with x.
  auto successors = [&](int x) {
    std::vector<int> out;
    for (int y : cx.faces(x))
      if (field.partner(y) != x) out.push_back(y);
    for (int y : cx.cofaces(x))
      if (field.partner(x) == y) out.push_back(y);
    return out;
  };
  enum : char { white, grey, black };
  std::vector<char> color(cx.size(), white);
  for (int root = 0; root < cx.size(); ++root) {
    if (color[root] != white) continue;
    std::vector<std::pair<int, std::vector<int>>> stack;
    stack.push_back({root, successors(root)});
    color[root] = grey;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next.empty()) {
        color[x] = black;
        stack.pop_back();
        continue;
      }
      int y = next.back();
      next.pop_back();
      if (color[y] == grey) return false;
      if (color[y] == white) {
        color[y] = grey;
        stack.push_back({y, successors(y)});
      }
    }
  }
  return true;
}

std::set<std::vector<long>> circle_failing_classes(const AdaptedBasis& basis, int bound) {
  const int m = basis.m();
  const int rank = basis.quotient_basis.rank();
  std::set<std::vector<long>> out;
  std::vector<long> odd, even;
  for (long x = -bound; x <= bound; ++x) (x % 2 == 0 ? even : odd).push_back(x);

  std::vector<long> q(m);
  std::function<void(int, long)> fill = [&](int i, long p) {
    if (i < m) {
      for (long v : even) {
        q[i] = v;
        fill(i + 1, p);
      }
      return;
    }
    std::vector<long> psi_e(rank);
    psi_e[basis.c_generator] = p;
    for (int j = 0, ci = 0; j < rank; ++j) {
      if (j == basis.c_generator) continue;
      psi_e[j] = basis.e_theta[j] == 0 ? q[ci] : q[ci] - p;
      ++ci;
    }
    std::vector<long> alpha;
    for (const IndexWord& s : basis.schreier) {
      long value = 0;
      for (const auto& l : s) value += l.exp * psi_e[l.gen];
      if (value % 2 != 0) throw InternalError("Schreier word has odd image in B2(S^1)");
      alpha.push_back(value / 2);
    }
    out.insert(std::move(alpha));
  };
  for (long p : odd) fill(0, p);
  return out;
}

Graph random_graph(std::mt19937& rng, int min_n, int max_n) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  std::vector<std::vector<Vertex>> adj(n);
  auto connect = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int v = 1; v < n; ++v) connect(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::bernoulli_distribution extra(std::uniform_real_distribution<double>(0.05, 0.35)(rng));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end() && extra(rng)) connect(a, b);
  for (auto& r : adj) std::shuffle(r.begin(), r.end(), rng);
  return Graph(std::move(adj));
}

Graph shuffled_embedding(const Graph& g, std::mt19937& rng) {
  std::vector<std::vector<Vertex>> rotation;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    rotation.push_back(g.neighbors(v));
    std::shuffle(rotation.back().begin(), rotation.back().end(), rng);
  }
  return Graph(std::move(rotation), g.labels());
}

ZWord random_z_word(std::mt19937& rng, int k, int max_len) {
  std::vector<ZGen> alphabet;
  for (int i = 1; i <= k; ++i) alphabet.push_back(ZGen{i});
  return random_word(rng, alphabet, max_len);
}

}  // namespace gbu::oracle
