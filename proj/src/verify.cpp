#include "gbu/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gbu/braid.hpp"
#include "gbu/bu_engine.hpp"
#include "gbu/config_complex.hpp"
#include "gbu/errors.hpp"
#include "gbu/involution.hpp"
#include "gbu/morse.hpp"
#include "gbu/oracles.hpp"

namespace gbu {

namespace fs = std::filesystem;

std::vector<CorpusCase> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusCase> out;
  for (const auto& path : files) {
    CorpusCase c;
    c.name = path.stem().string();
    c.file = read_graph_file(path.string());
    fs::path golden = path;
    golden.replace_extension(".census");
    if (fs::exists(golden)) {
      std::ifstream in(golden);
      std::stringstream ss;
      ss << in.rdbuf();
      c.golden = ss.str();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string census_text(const Graph& g, std::optional<int> root) {
  const OrderedGraph og = order_graph(g, root);
  const CellComplex d2 = build_ordered(og);
  const CellComplex ud2 = build_unordered(og);
  return census_report("D2", d2, build_field(og, d2)) + census_report("UD2", ud2, build_field(og, ud2));
}

bool VerifyReport::pass() const {
  if (!golden_diffs.empty()) return false;
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
}

namespace {

struct Target {
  std::string name;
  Graph graph;
  TargetType type;
};

struct Source {
  std::string name;
  InvolutionGraph ig;
  AdaptedBasis basis;
};

struct Variant {
  std::string label;
  BraidModel model;
  KeyElements key;
};

std::string line_diff(const std::string& expected, const std::string& got) {
  auto split = [](const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return lines;
  };
  const auto a = split(expected), b = split(got);
  std::string out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const std::string x = i < a.size() ? a[i] : "<missing>";
    const std::string y = i < b.size() ? b[i] : "<missing>";
    if (x != y) out += "\n  line " + std::to_string(i + 1) + ": expected '" + x + "', got '" + y + "'";
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& o) : opt_(o), rng_(o.seed) {
    const char* titles[10] = {
        "gradient field is an acyclic matching with critical 0-cells (0,1),(1,0) and {0,1}",
        "Euler characteristic of all cells equals that of critical cells",
        "iota closed form equals the projected representing loop",
        "conjugation table equals sigma-conjugation of iota images",
        "theta equals lift parity; theta vanishes on iota images",
        "p1 closed form equals first-coordinate projection",
        "key element identities in each available tree branch",
        "witness diagrams verify on fuzzed classes",
        "circle classifier agrees with brute-force search",
        "UD2(Y) has one critical 1-cell whose loop lift swaps sheets",
    };
    for (int i = 0; i < 10; ++i) report_.criteria[i] = {i + 1, titles[i], 0, {}};
  }

  VerifyReport run(const std::vector<CorpusCase>& corpus) {
    report_.cases = static_cast<int>(corpus.size());
    std::vector<Target> targets;
    for (const auto& c : corpus) {
      if (!c.file.tau_vertices.empty()) {
        guard(8, c.name, [&] { add_source(c); });
        continue;
      }
      const Graph g = subdivide_to_simplicial(c.file.graph);
      targets.push_back({c.name, g, classify_target(c.file.graph)});
      if (c.golden) {
        const std::string got = census_text(g);
        if (got != *c.golden) report_.golden_diffs.push_back(c.name + ".census differs:" + line_diff(*c.golden, got));
      }
    }
    for (int i = 0; i < opt_.random_graphs; ++i) {
      Graph g = oracle::random_graph(rng_, 4, 12);
      targets.push_back({"random" + std::to_string(i + 1), g, classify_target(g.as_multigraph())});
    }
    for (const auto& t : targets) check_target(t);
    std::string blocks;
    for (const auto& [row, count] : table_rows_) blocks += " " + row + "=" + std::to_string(count);
    report_.notes.push_back("conjugation table rows exercised:" + blocks);
    expect(4, "corpus", table_rows_.size() == 6, [] { return "some conjugation table row was never exercised"; });
    check_witnesses();
    check_circle();
    return std::move(report_);
  }

 private:
  CriterionResult& crit(int id) { return report_.criteria[id - 1]; }
  void fail(int id, const std::string& where, const std::string& what) {
    crit(id).failures.push_back(where + ": " + what);
  }
  void expect(int id, const std::string& where, bool ok, const std::function<std::string()>& what) {
    ++crit(id).checks;
    if (!ok) fail(id, where, what());
  }
  void guard(int id, const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++crit(id).checks;
      fail(id, where, e.what());
    }
  }

  void add_source(const CorpusCase& c) {
    Graph g = Graph::from_multigraph(c.file.graph);
    InvolutionGraph ig = make_involution(g, c.file);
    AdaptedBasis basis = adapt_basis(ig);
    // Lifted generators must be distinct reduced words up to length 4 in
    // the Schreier generators, i.e. free on a small ball.
    std::vector<IndexWord> gens = basis.lifted;
    std::map<IndexWord, IndexWord> source_of;
    std::vector<std::pair<IndexWord, IndexWord>> frontier{{IndexWord{}, IndexWord{}}};
    source_of[IndexWord{}] = IndexWord{};
    bool is_free = true;
    for (int len = 0; len < 4 && is_free; ++len) {
      std::vector<std::pair<IndexWord, IndexWord>> next;
      for (const auto& [abstract, image] : frontier)
        for (int j = 0; j < static_cast<int>(gens.size()) && is_free; ++j)
          for (int e : {1, -1}) {
            IndexWord a = abstract * IndexWord::generator(j, e);
            if (a.size() != static_cast<std::size_t>(len + 1)) continue;
            IndexWord im = image * gens[j].pow(e);
            auto [it, inserted] = source_of.emplace(im, a);
            if (!inserted) is_free = false;
            next.push_back({a, im});
          }
      frontier = std::move(next);
    }
    if (!is_free) throw InternalError(c.name + ": lifted Schreier generators are not free");
    report_.notes.push_back(c.name + ": m=" + std::to_string(ig.m()) + " quotient rank " +
                            std::to_string(basis.quotient_basis.rank()) + " gamma rank " +
                            std::to_string(basis.gamma_basis.rank()));
    sources_.push_back({c.name, std::move(ig), std::move(basis)});
  }

  void check_target(const Target& t) {
    const std::string& n = t.name;
    std::optional<OrderedGraph> og;
    guard(1, n, [&] { og = order_graph(t.graph); });
    if (!og) return;
    const CellComplex d2 = build_ordered(*og);
    const CellComplex ud2 = build_unordered(*og);
    std::optional<GradientField> f2, uf2;
    guard(1, n + " D2", [&] { f2 = build_field(*og, d2); });
    guard(1, n + " UD2", [&] { uf2 = build_field(*og, ud2); });
    if (!f2 || !uf2) return;

    for (auto [cx, f, label] : {std::tuple{&d2, &*f2, "D2"}, std::tuple{&ud2, &*uf2, "UD2"}}) {
      const std::string where = n + " " + label;
      expect(1, where, matching_well_formed(*cx, *f), [] { return "matching is not well formed"; });
      expect(1, where, oracle::hasse_acyclic_by_dfs(*cx, *f), [] { return "modified Hasse diagram has a cycle"; });
      expect(1, where, modified_hasse_is_acyclic(*cx, *f), [] { return "topological sort failed"; });
      std::vector<ConfigCell> crit0;
      for (int id : f->critical_cells(0)) crit0.push_back(cx->cell(id));
      std::vector<ConfigCell> want;
      if (cx->kind() == CellKind::ordered)
        want = {ConfigCell::ordered(GCell::vertex(0), GCell::vertex(1)),
                ConfigCell::ordered(GCell::vertex(1), GCell::vertex(0))};
      else
        want = {ConfigCell::unordered(GCell::vertex(0), GCell::vertex(1))};
      std::sort(crit0.begin(), crit0.end());
      expect(1, where, crit0 == want, [&] {
        std::string s = "critical 0-cells:";
        for (const auto& c : crit0) s += " " + to_string(c);
        return s;
      });
      const auto counts = f->critical_counts();
      const int crit_euler = counts[0] - counts[1] + counts[2];
      expect(2, where, cx->euler_characteristic() == crit_euler, [&] {
        return "euler " + std::to_string(cx->euler_characteristic()) + " vs critical " + std::to_string(crit_euler);
      });
    }
    const auto c2 = d2.counts(), uc2 = ud2.counts();
    for (int d = 0; d < 3; ++d)
      expect(1, n, c2[d] == 2 * uc2[d], [&] { return "UD2 is not half of D2 in dim " + std::to_string(d); });

    if (t.type == TargetType::interval) return;
    std::optional<BraidModel> model;
    guard(3, n, [&] { model = BraidModel::build(*og); });
    if (!model) return;
    check_generators(n, *model);
    if (t.type == TargetType::general) check_key_elements(t);
    if (t.type == TargetType::tree) tree_models_.push_back({n, *model});
    if (n == "y") check_y(*model);
  }

  // "(r,(s,t)):r<s" style name of the table row a generator falls in.
  static std::string table_row(const ConfigCell& g) {
    const bool vf = g.ing[0].is_vertex();
    const GCell v = vf ? g.ing[0] : g.ing[1];
    const GCell e = vf ? g.ing[1] : g.ing[0];
    const std::string shape = vf ? "(r,(s,t))" : "((s,t),r)";
    if (v.lo < e.lo) return shape + ":r<s";
    if (v.lo < e.hi) return shape + ":s<r<t";
    return shape + ":t<r";
  }

  static bool matching_well_formed(const CellComplex& cx, const GradientField& f) {
    for (int id = 0; id < cx.size(); ++id) {
      const int p = f.partner(id);
      if (f.status(id) == CellStatus::critical) {
        if (p != -1) return false;
        continue;
      }
      if (p < 0 || f.partner(p) != id) return false;
      const auto faces = f.status(id) == CellStatus::redundant ? cx.cofaces(id) : cx.faces(id);
      if (std::find(faces.begin(), faces.end(), p) == faces.end()) return false;
    }
    return true;
  }

  void check_generators(const std::string& n, const BraidModel& m) {
    const GeneratorTable& t = m.generators();
    const CellWord sigma = CellWord::generator(t.sigma);
    for (const ConfigCell& g : t.p2) {
      const CellWord w = CellWord::generator(g);
      const std::string where = n + " " + to_string(g);
      ++table_rows_[table_row(g)];
      guard(3, where, [&] {
        const CellWord closed = iota(t, w);
        const CellWord oracle = oracle::iota_by_projection(m, w);
        expect(3, where, closed == oracle, [&] { return "closed " + to_string(closed) + " vs loop " + to_string(oracle); });
      });
      guard(4, where, [&] {
        const CellWord lhs = iota(t, conjugate_by_sigma(t, w));
        const CellWord rhs = sigma * iota(t, w) * sigma.inverse();
        expect(4, where, lhs == rhs, [&] { return to_string(lhs) + " vs " + to_string(rhs); });
        const CellWord via_loops = oracle::iota_by_projection(m, conjugate_by_sigma(t, w));
        const CellWord rhs_loops = sigma * oracle::iota_by_projection(m, w) * sigma.inverse();
        expect(4, where + " (loops)", via_loops == rhs_loops,
               [&] { return to_string(via_loops) + " vs " + to_string(rhs_loops); });
      });
      guard(6, where, [&] {
        const ZWord closed = p1(t, w);
        const ZWord oracle = oracle::p1_by_first_coordinate(m, w);
        expect(6, where, closed == oracle, [&] { return "closed " + to_string(closed) + " vs path " + to_string(oracle); });
      });
    }
    guard(3, n + " rho", [&] {
      const CellWord rho = CellWord::generator(t.rho);
      expect(3, n + " iota(rho)", iota(t, rho) == sigma * sigma, [&] { return to_string(iota(t, rho)); });
      const CellWord loop = oracle::iota_by_projection(m, rho);
      expect(3, n + " loop(rho)", loop == sigma * sigma, [&] { return to_string(loop); });
    });
    for (const ConfigCell& b : t.b2) {
      const std::string where = n + " " + to_string(b);
      guard(5, where, [&] {
        const CellWord w = CellWord::generator(b);
        const int closed = theta(w), lifted = oracle::theta_by_lifting(m, w);
        expect(5, where, closed == lifted,
               [&] { return "theta " + std::to_string(closed) + " vs lift " + std::to_string(lifted); });
      });
    }
    for (int i = 0; i < opt_.random_words; ++i) {
      const CellWord w = oracle::random_word(rng_, t.p2, opt_.max_word_len);
      const CellWord image = iota(t, w);
      expect(5, n + " random word", theta(image) == 0, [&] { return "theta(iota(" + to_string(w) + ")) = 1"; });
      if (i < 25) {
        guard(5, n + " random word lift", [&] {
          expect(5, n + " random word lift", oracle::theta_by_lifting(m, image) == 0,
                 [&] { return "lift of iota(" + to_string(w) + ") swaps sheets"; });
        });
      }
    }
  }

  // Tries the DFS order of the corpus embedding, then shuffled embeddings
  // and random spanning trees, until both branches are seen.
  void check_key_elements(const Target& t) {
    std::map<Branch, int> found;
    auto try_variant = [&](const std::string& label, const std::function<OrderedGraph()>& make) {
      std::optional<OrderedGraph> og;
      try {
        og = make();
      } catch (const InputError&) {
        return;
      }
      if (og->deleted_edges().empty()) return;
      const Branch branch = essential_vertex(*og) ? Branch::essential : Branch::linear;
      if (found[branch] >= 2) return;
      std::optional<BraidModel> model;
      guard(7, t.name + " " + label, [&] { model = BraidModel::build(*og); });
      if (!model) return;
      try {
        KeyElements key = build_key_elements(*model);
        ++crit(7).checks;
        ++found[branch];
        if (og->deleted_edges().size() <= 3)
          variants_[branch].push_back({t.name + " " + label, std::move(*model), std::move(key)});
      } catch (const InputError&) {
        // lambda_i not critical for this tree
      } catch (const InternalError& e) {
        ++crit(7).checks;
        fail(7, t.name + " " + label, e.what());
      }
    };
    try_variant("dfs", [&] { return order_graph(t.graph); });
    for (int a = 0; a < opt_.tree_attempts && (found[Branch::essential] < 2 || found[Branch::linear] < 2); ++a) {
      if (a % 2 == 0) {
        try_variant("dfs#" + std::to_string(a), [&] {
          Graph g = oracle::shuffled_embedding(t.graph, rng_);
          const int root = g.label(std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng_));
          return order_graph(g, root);
        });
      } else {
        try_variant("tree#" + std::to_string(a), [&] { return order_graph(t.graph, std::nullopt, random_tree(t.graph)); });
      }
    }
    std::string branches;
    for (auto [b, count] : found)
      if (count > 0) branches += std::string(branches.empty() ? "" : ", ") + std::string(to_string(b));
    report_.notes.push_back(t.name + ": key elements verified in branches: " + (branches.empty() ? "none" : branches));
    if (branches.empty()) fail(7, t.name, "no tree produced valid key elements");
  }

  std::vector<std::pair<int, int>> random_tree(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng_);
    std::vector<int> comp(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    std::vector<std::pair<int, int>> tree;
    for (const Edge& e : edges) {
      int a = find(e.lo), b = find(e.hi);
      if (a == b) continue;
      comp[a] = b;
      tree.emplace_back(g.label(e.lo), g.label(e.hi));
    }
    return tree;
  }

  void check_y(const BraidModel& m) {
    const auto& b2 = m.generators().b2;
    expect(10, "y", b2.size() == 1, [&] { return std::to_string(b2.size()) + " critical 1-cells in UD2"; });
    if (b2.size() != 1) return;
    const CellWord g = CellWord::generator(b2[0]);
    const EdgePath lifted = oracle::lift_word(m, g);
    const int end = m.ordered().endpoint(lifted);
    const ConfigCell want = ConfigCell::ordered(GCell::vertex(1), GCell::vertex(0));
    expect(10, "y", m.ordered().cell(end) == want,
           [&] { return "lift of " + to_string(b2[0]) + " ends at " + to_string(m.ordered().cell(end)); });
    expect(10, "y", theta(g) == 1, [&] { return "theta of " + to_string(b2[0]) + " is 0"; });
  }

  void check_witnesses() {
    std::vector<const Source*> small;
    for (const auto& s : sources_)
      if (s.basis.m() <= 2) small.push_back(&s);
    if (small.empty()) {
      fail(8, "corpus", "no source graph with m <= 2");
      return;
    }
    for (Branch b : {Branch::essential, Branch::linear}) {
      const auto& pool = variants_[b];
      const std::string bname(to_string(b));
      if (pool.empty()) {
        fail(8, bname, "no target with k <= 3 in this branch");
        continue;
      }
      for (int i = 0; i < opt_.fuzz_classes; ++i) {
        const Source& s = *small[i % small.size()];
        const Variant& v = pool[(i / small.size()) % pool.size()];
        const int k = static_cast<int>(v.key.lambdas.size());
        HomotopyClass alpha;
        for (int j = 0; j < 2 * s.basis.m() + 1; ++j)
          alpha.words.push_back(oracle::random_z_word(rng_, k, opt_.max_word_len));
        const std::string where = bname + " " + s.name + " -> " + v.label + " #" + std::to_string(i);
        guard(8, where, [&] {
          WitnessDiagram wd = construct_witness(alpha, v.model, v.key, s.basis);
          ++crit(8).checks;
          if (i < 40) cross_check_witness(where, v.model, s.basis, wd, alpha);
        });
      }
    }
    for (const auto& [name, model] : tree_models_)
      for (const Source* s : small)
        guard(8, name + " tree " + s->name, [&] {
          classify_tree(model, s->basis);
          ++crit(8).checks;
        });
  }

  // Re-derives theta2(psi) and p1(phi) through lifts and first-coordinate paths.
  void cross_check_witness(const std::string& where, const BraidModel& m, const AdaptedBasis& basis,
                           const WitnessDiagram& wd, const HomotopyClass& alpha) {
    expect(8, where, oracle::theta_by_lifting(m, wd.psi_c) == basis.theta1_c, [] { return "lift parity of psi(c)"; });
    for (std::size_t i = 0; i < wd.psi_ci.size(); ++i)
      expect(8, where, oracle::theta_by_lifting(m, wd.psi_ci[i]) == basis.theta1_ci[i],
             [] { return "lift parity of psi(c_i)"; });
    for (std::size_t j = 0; j < wd.phi.size(); ++j) {
      const ZWord path = oracle::p1_by_first_coordinate(m, wd.phi[j]);
      expect(8, where, path == alpha.words[j],
             [&] { return "first-coordinate path " + to_string(path) + " vs " + to_string(alpha.words[j]); });
    }
  }

  void check_circle() {
    for (const auto& s : sources_) {
      const int m = s.basis.m();
      if (m > 2) continue;
      std::set<std::vector<long>> failing;
      guard(9, s.name, [&] { failing = oracle::circle_failing_classes(s.basis, opt_.circle_bound); });
      std::vector<long> alpha(2 * m + 1, -opt_.circle_range);
      while (true) {
        guard(9, s.name, [&] {
          const bool closed_fails = !classify_circle(alpha, m).holds;
          const bool brute_fails = failing.count(alpha) > 0;
          expect(9, s.name, closed_fails == brute_fails, [&] {
            std::string a;
            for (long x : alpha) a += " " + std::to_string(x);
            return "class" + a + ": closed form " + (closed_fails ? "fails" : "holds") + ", search " +
                   (brute_fails ? "fails" : "holds");
          });
        });
        std::size_t i = 0;
        while (i < alpha.size() && alpha[i] == opt_.circle_range) alpha[i++] = -opt_.circle_range;
        if (i == alpha.size()) break;
        ++alpha[i];
      }
    }
  }

  VerifyOptions opt_;
  std::mt19937 rng_;
  VerifyReport report_;
  std::vector<Source> sources_;
  std::map<Branch, std::vector<Variant>> variants_;
  std::vector<std::pair<std::string, BraidModel>> tree_models_;
  std::map<std::string, int> table_rows_;
};

}  // namespace

VerifyReport verify_corpus(const std::vector<CorpusCase>& corpus, const VerifyOptions& options) {
  return Runner(options).run(corpus);
}

}  // namespace gbu
