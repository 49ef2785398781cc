#include "gbu/involution.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "gbu/errors.hpp"

namespace gbu {

namespace {

Vertex step_source(const MultiGraph& g, const LinkStep& s) {
  const auto& l = g.link(s.link);
  return s.forward ? l.u : l.v;
}

Vertex step_target(const MultiGraph& g, const LinkStep& s) {
  const auto& l = g.link(s.link);
  return s.forward ? l.v : l.u;
}

}  // namespace

Vertex Walk::end(const MultiGraph& g) const {
  return steps.empty() ? start : step_target(g, steps.back());
}

Walk Walk::reversed(const MultiGraph& g) const {
  Walk r;
  r.start = end(g);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) r.steps.push_back({it->link, !it->forward});
  return r;
}

Walk& Walk::append(const Walk& other) {
  if (start == kNoVertex) start = other.start;
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  return *this;
}

std::string to_string(const IndexWord& w, const std::string& prefix) {
  return format_word(w, [&](int g) { return prefix + std::to_string(g); });
}

IndexWord FundamentalBasis::word_of(const MultiGraph& g, const Walk& w) const {
  if (w.start != base || w.end(g) != base)
    throw InputError("walk is not a loop at vertex " + std::to_string(g.label(base)));
  IndexWord out;
  for (const auto& s : w.steps) {
    int gen = generator_of_link[s.link];
    if (gen < 0) continue;
    out *= IndexWord::generator(gen, s.forward ? 1 : -1);
  }
  return out;
}

Walk FundamentalBasis::walk_of(const MultiGraph& g, const IndexWord& w) const {
  Walk out;
  out.start = base;
  for (const auto& l : w) {
    const Walk& loop = loops[l.gen];
    out.append(l.exp > 0 ? loop : loop.reversed(g));
  }
  return out;
}

FundamentalBasis fundamental_basis(const MultiGraph& g, Vertex base) {
  FundamentalBasis fb;
  fb.base = base;
  fb.tree_link.assign(g.link_count(), 0);
  fb.generator_of_link.assign(g.link_count(), -1);

  // arrival[v]: step entering v from its BFS parent
  std::vector<std::optional<LinkStep>> arrival(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<Vertex> queue{base};
  seen[base] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (int id : g.incident(v)) {
      const auto& l = g.link(id);
      Vertex w = l.u == v ? l.v : l.u;
      if (seen[w]) continue;
      seen[w] = 1;
      fb.tree_link[id] = 1;
      arrival[w] = LinkStep{id, l.u == v};
      queue.push_back(w);
    }
  }

  auto path_from_base = [&](Vertex v) {
    std::vector<LinkStep> rev;
    while (v != base) {
      rev.push_back(*arrival[v]);
      v = step_source(g, *arrival[v]);
    }
    Walk w;
    w.start = base;
    w.steps.assign(rev.rbegin(), rev.rend());
    return w;
  };

  for (int id = 0; id < g.link_count(); ++id) {
    if (fb.tree_link[id]) continue;
    const auto& l = g.link(id);
    fb.generator_of_link[id] = fb.rank();
    fb.generators.push_back(id);
    Walk loop = path_from_base(l.u);
    loop.steps.push_back({id, true});
    loop.append(path_from_base(l.v).reversed(g));
    fb.loops.push_back(std::move(loop));
  }
  return fb;
}

InvolutionGraph::InvolutionGraph(Graph gamma, std::vector<Vertex> tau)
    : gamma_(std::move(gamma)), tau_(std::move(tau)) {
  const int n = gamma_.vertex_count();
  if (static_cast<int>(tau_.size()) != n)
    throw InputError("tau must be defined on all " + std::to_string(n) + " vertices");

  std::vector<std::string> problems;
  auto name = [&](Vertex v) { return std::to_string(gamma_.label(v)); };
  for (Vertex v = 0; v < n; ++v) {
    Vertex t = tau_[v];
    if (t < 0 || t >= n) {
      problems.push_back("vertex " + name(v) + " has no image");
    } else if (t == v) {
      problems.push_back("vertex " + name(v) + " is fixed");
    } else if (tau_[t] != v) {
      problems.push_back("vertex " + name(v) + ": tau(tau(" + name(v) + ")) != " + name(v));
    }
  }
  if (problems.empty()) {
    for (const Edge& e : gamma_.edges()) {
      std::string en = name(e.lo) + "-" + name(e.hi);
      if (tau_[e.lo] == e.hi) {
        problems.push_back("edge " + en + " is reversed onto itself");
      } else if (!gamma_.adjacent(tau_[e.lo], tau_[e.hi])) {
        problems.push_back("edge " + en + " maps to non-edge " + name(tau_[e.lo]) + "-" +
                           name(tau_[e.hi]));
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "tau is not a free involution:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InputError(msg);
  }
  if (gamma_.euler_characteristic() > 0)
    throw InputError("free involution on a tree is impossible");

  gamma_links_ = gamma_.as_multigraph();

  vertex_orbit_.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (vertex_orbit_[v] >= 0) continue;
    vertex_orbit_[v] = vertex_orbit_[tau_[v]] = static_cast<int>(lift_vertex_.size());
    lift_vertex_.push_back(v);
  }

  // Quotient rotation: push each orbit of edges onto both endpoint lists at
  // once, so the k-th parallel copy pairs with the k-th.
  const int qn = static_cast<int>(lift_vertex_.size());
  std::vector<std::vector<Vertex>> rotation(qn);
  std::vector<std::pair<int, int>> slot;  // per quotient edge: (vertex, position)
  std::vector<std::pair<int, int>> orbit_links;
  link_orbit_.assign(gamma_.edge_count(), -1);
  for (int id = 0; id < gamma_.edge_count(); ++id) {
    if (link_orbit_[id] >= 0) continue;
    const Edge e = gamma_.edges()[id];
    const int partner = *gamma_.edge_index(Edge::of(tau_[e.lo], tau_[e.hi]));
    const int qe = static_cast<int>(orbit_links.size());
    link_orbit_[id] = link_orbit_[partner] = qe;
    orbit_links.emplace_back(id, partner);
    int a = vertex_orbit_[e.lo], b = vertex_orbit_[e.hi];
    slot.emplace_back(a, static_cast<int>(rotation[a].size()));
    rotation[a].push_back(b);
    rotation[b].push_back(a);
  }
  std::vector<int> labels(qn);
  for (int q = 0; q < qn; ++q) labels[q] = gamma_.label(lift_vertex_[q]);
  quotient_ = MultiGraph(std::move(rotation), std::move(labels));

  lifts_of_link_.assign(quotient_.link_count(), {-1, -1});
  std::vector<int> qe_to_link(orbit_links.size());
  for (std::size_t qe = 0; qe < orbit_links.size(); ++qe) {
    auto [v, pos] = slot[qe];
    qe_to_link[qe] = quotient_.incident(v)[pos];
    lifts_of_link_[qe_to_link[qe]] = orbit_links[qe];
  }
  for (int& o : link_orbit_) o = qe_to_link[o];
}

Walk InvolutionGraph::lift(const Walk& quotient_walk, Vertex start) const {
  if (vertex_orbit_[start] != quotient_walk.start)
    throw InputError("lift start does not lie over the walk's start");
  Walk out;
  out.start = start;
  Vertex x = start;
  for (const auto& s : quotient_walk.steps) {
    int from = step_source(quotient_, s);
    auto [l1, l2] = lifts_of_link_[s.link];
    bool moved = false;
    for (int id : {l1, l2}) {
      const Edge e = gamma_.edges()[id];
      if (!e.contains(x) || vertex_orbit_[x] != from) continue;
      Vertex y = e.lo == x ? e.hi : e.lo;
      out.steps.push_back({id, e.lo == x});
      x = y;
      moved = true;
      break;
    }
    if (!moved) throw InputError("quotient walk is not connected");
  }
  return out;
}

InvolutionGraph make_involution(const Graph& gamma, const GraphFile& file) {
  const int n = gamma.vertex_count();
  auto vertex = [&](int label) {
    auto v = gamma.vertex_with_label(label);
    if (!v) throw InputError("tau mentions unknown vertex " + std::to_string(label));
    return *v;
  };
  std::vector<Vertex> tau(n, kNoVertex);
  std::vector<std::string> problems;
  auto assign = [&](Vertex a, Vertex b) {
    if (tau[a] != kNoVertex && tau[a] != b)
      problems.push_back("vertex " + std::to_string(gamma.label(a)) + " has two images");
    tau[a] = b;
  };
  for (auto [a, b] : file.tau_vertices) {
    Vertex va = vertex(a), vb = vertex(b);
    assign(va, vb);
    assign(vb, va);
  }
  for (Vertex v = 0; v < n; ++v)
    if (tau[v] == kNoVertex) problems.push_back("vertex " + std::to_string(gamma.label(v)) + " has no image");
  if (problems.empty()) {
    for (const auto& [e, f] : file.tau_edges) {
      Vertex a = vertex(e.a), b = vertex(e.b), c = vertex(f.a), d = vertex(f.b);
      if (!gamma.adjacent(a, b) || !gamma.adjacent(c, d)) {
        problems.push_back("tau e " + std::to_string(e.a) + "-" + std::to_string(e.b) + " " +
                           std::to_string(f.a) + "-" + std::to_string(f.b) + " names a non-edge");
      } else if (Edge::of(tau[a], tau[b]) != Edge::of(c, d)) {
        problems.push_back("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                           " is not paired with " + std::to_string(f.a) + "-" +
                           std::to_string(f.b) + " by the vertex map");
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "tau is not a free involution:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InputError(msg);
  }
  return InvolutionGraph(gamma, std::move(tau));
}

int theta1_of_loop(const InvolutionGraph& ig, const Walk& quotient_loop) {
  const MultiGraph& q = ig.quotient();
  if (quotient_loop.end(q) != quotient_loop.start) throw InputError("walk is not closed");
  Vertex start = ig.lift_vertex(quotient_loop.start);
  Walk lifted = ig.lift(quotient_loop, start);
  return lifted.end(ig.gamma_links()) == start ? 0 : 1;
}

AdaptedBasis adapt_basis(const InvolutionGraph& ig) {
  const MultiGraph& q = ig.quotient();
  const MultiGraph& g = ig.gamma_links();
  AdaptedBasis ab;
  ab.quotient_basis = fundamental_basis(q, 0);
  const Vertex gamma_base = ig.lift_vertex(0);
  ab.gamma_basis = fundamental_basis(g, gamma_base);

  const int m = ig.m();
  if (ab.quotient_basis.rank() != m + 1 || ab.gamma_basis.rank() != 2 * m + 1)
    throw InternalError("basis ranks differ from m+1 and 2m+1");

  for (const Walk& loop : ab.quotient_basis.loops) ab.e_theta.push_back(theta1_of_loop(ig, loop));
  auto first = std::find(ab.e_theta.begin(), ab.e_theta.end(), 1);
  if (first == ab.e_theta.end()) throw InternalError("theta1 vanishes on every basis loop");
  ab.c_generator = static_cast<int>(first - ab.e_theta.begin());

  const IndexWord c = IndexWord::generator(ab.c_generator);
  ab.c = c;
  for (int j = 0; j <= m; ++j) {
    if (j == ab.c_generator) continue;
    IndexWord e = IndexWord::generator(j);
    ab.c_i.push_back(ab.e_theta[j] == 0 ? e : c * e);
  }

  // Schreier system {1, c}: generator t*x*rep(t x)^{-1} for t in {1, c} and x
  // in {c, c_i}; the nontrivial ones are c^2, c_i and c c_i c^{-1}.
  auto schreier = [&](const IndexWord& t, const IndexWord& x, int parity) {
    IndexWord rep = parity ? c : IndexWord{};
    return t * x * rep.inverse();
  };
  ab.schreier.push_back(schreier(c, c, 0));
  for (const IndexWord& ci : ab.c_i) {
    ab.schreier.push_back(schreier(IndexWord{}, ci, 0));
    ab.schreier.push_back(schreier(c, ci, 1));
  }

  auto theta_word = [&](const IndexWord& w) {
    return theta1_of_loop(ig, ab.quotient_basis.walk_of(q, w));
  };
  ab.theta1_c = theta_word(c);
  for (const IndexWord& ci : ab.c_i) ab.theta1_ci.push_back(theta_word(ci));
  if (ab.theta1_c != 1) throw InternalError("theta1(c) != 1");
  for (int t : ab.theta1_ci)
    if (t != 0) throw InternalError("theta1(c_i) != 0");

  for (const IndexWord& s : ab.schreier) {
    Walk lifted = ig.lift(ab.quotient_basis.walk_of(q, s), gamma_base);
    if (lifted.end(g) != gamma_base)
      throw InternalError("Schreier generator " + to_string(s, "e") + " does not lift to a loop");
    ab.lifted.push_back(ab.gamma_basis.word_of(g, lifted));
  }
  return ab;
}

}  // namespace gbu
