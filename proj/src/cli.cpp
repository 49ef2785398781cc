#include "gbu/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbu/braid.hpp"
#include "gbu/bu_engine.hpp"
#include "gbu/config_complex.hpp"
#include "gbu/errors.hpp"
#include "gbu/graph.hpp"
#include "gbu/graph_io.hpp"
#include "gbu/involution.hpp"
#include "gbu/morse.hpp"
#include "gbu/oracles.hpp"
#include "gbu/verify.hpp"

namespace gbu {

namespace {

struct Line {
  std::string key;
  std::string value;
  bool plain = false;  // human form is "key value" rather than "key: value"
};

class Printer {
 public:
  Printer(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void line(std::string key, std::string value) { print({std::move(key), std::move(value)}); }

  /// A bare value in human form, `result=value` in machine form.
  void result(const std::string& value) {
    if (format_ == OutputFormat::machine)
      out_ << "result=" << value << "\n";
    else
      out_ << value << "\n";
  }

  /// Census text: "X: Y" lines keep their key, "D2 connected" style lines
  /// become key "D2 topology".
  void census(const std::string& text) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (auto colon = l.find(": "); colon != std::string::npos) {
        print({l.substr(0, colon), l.substr(colon + 2)});
      } else {
        auto space = l.find(' ');
        print({l.substr(0, space) + " topology", l.substr(space + 1), true});
      }
    }
  }

  void print(const Line& l) {
    if (format_ == OutputFormat::machine) {
      std::string key = l.key;
      std::replace(key.begin(), key.end(), ' ', '_');
      out_ << key << "=" << l.value << "\n";
    } else if (l.plain) {
      out_ << l.key.substr(0, l.key.find(' ')) << " " << l.value << "\n";
    } else {
      out_ << l.key << ": " << l.value << "\n";
    }
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "human") return OutputFormat::human;
  if (s == "machine") return OutputFormat::machine;
  throw InputError("unknown format '" + s + "'; use human or machine");
}

std::optional<std::vector<std::pair<int, int>>> parse_tree(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_edge_list(text);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vertex_order(const OrderedGraph& og) {
  std::vector<std::string> parts;
  for (Vertex v = 0; v < og.vertex_count(); ++v) parts.push_back(std::to_string(v) + "=" + std::to_string(og.label(v)));
  return join(parts);
}

std::string deleted_list(const OrderedGraph& og) {
  std::vector<std::string> parts;
  const auto& z = og.deleted_edges();
  for (std::size_t i = 0; i < z.size(); ++i) parts.push_back("z" + std::to_string(i + 1) + "=" + to_string(z[i]));
  return parts.empty() ? "none" : join(parts);
}

std::string cell_list(const std::vector<ConfigCell>& cells) {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(to_string(c));
  return parts.empty() ? "none" : join(parts);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TargetFlags {
  std::optional<int> root;
  std::string tree;
};

void add_target_flags(CLI::App* cmd, TargetFlags& f) {
  cmd->add_option("--root", f.root, "Input id of the root vertex (degree 1 in the tree)");
  cmd->add_option("--tree", f.tree, "Spanning tree as u-v,u-v,... over input ids");
}

OrderedGraph ordered_target(const std::string& path, const TargetFlags& f) {
  const GraphFile file = read_graph_file(path);
  return order_graph(subdivide_to_simplicial(file.graph), f.root, parse_tree(f.tree));
}

// ---------------------------------------------------------------- commands

int cmd_model(const std::string& path, const TargetFlags& flags, bool dump, Printer& p) {
  const GraphFile file = read_graph_file(path);
  const Graph g = subdivide_to_simplicial(file.graph);
  const OrderedGraph og = order_graph(g, flags.root, parse_tree(flags.tree));
  p.line("vertices", std::to_string(g.vertex_count()));
  p.line("edges", std::to_string(g.edge_count()));
  if (g.vertex_count() != file.graph.vertex_count()) p.line("subdivided", "yes");
  p.line("vertex order", vertex_order(og));
  p.line("deleted edges", deleted_list(og));

  const CellComplex d2 = build_ordered(og);
  const CellComplex ud2 = build_unordered(og);
  const GradientField f2 = build_field(og, d2);
  const GradientField uf2 = build_field(og, ud2);
  p.census(census_report("D2", d2, f2));
  p.census(census_report("UD2", ud2, uf2));
  if (dump) {
    for (const auto& l : d2.dump_lines()) p.line("D2 cell", l);
    for (const auto& l : ud2.dump_lines()) p.line("UD2 cell", l);
  }

  const TargetType type = classify_target(file.graph);
  p.line("target type", std::string(to_string(type)));
  if (type == TargetType::interval) return kExitOk;
  const BraidModel m = BraidModel::build(og);
  const GeneratorTable& t = m.generators();
  p.line("connecting cell", to_string(t.connecting));
  p.line("sigma", to_string(t.sigma));
  p.line("rho", to_string(t.rho));
  p.line("P2 generators", cell_list(t.p2));
  p.line("B2 generators", cell_list(t.b2));
  return kExitOk;
}

int cmd_map(const std::string& path, const TargetFlags& flags, const std::string& morphism,
            const std::string& word, Printer& p) {
  static const std::vector<std::string> known{"iota", "theta", "p1", "conj_sigma", "rewrite", "lift"};
  if (std::find(known.begin(), known.end(), morphism) == known.end())
    throw InputError("unknown morphism '" + morphism + "'; expected one of: " + join(known, ", "));
  const BraidModel m = BraidModel::build(ordered_target(path, flags));
  const GeneratorTable& t = m.generators();
  const CellWord w = parse_cell_word(word);
  auto require_kind = [&](bool ordered) {
    for (const auto& l : w)
      if (l.gen.is_ordered() != ordered)
        throw InputError(morphism + " expects a " + (ordered ? "P2 word of (..) cells" : "B2 word of {..} cells") +
                         ", got " + to_string(l.gen));
    require_generators(t, w);
  };
  if (morphism == "iota") {
    require_kind(true);
    p.result(to_string(iota(t, w)));
  } else if (morphism == "conj_sigma") {
    require_kind(true);
    p.result(to_string(conjugate_by_sigma(t, w)));
  } else if (morphism == "p1") {
    require_kind(true);
    p.result(to_string(p1(t, w)));
  } else if (morphism == "theta") {
    require_kind(false);
    p.result(std::to_string(theta(w)));
  } else if (morphism == "rewrite") {
    require_kind(false);
    p.result(to_string(sigma_parity_rewrite(t, w)));
  } else {
    require_kind(false);
    const EdgePath lifted = oracle::lift_word(m, w);
    const int end = m.ordered().endpoint(lifted);
    p.line("start", to_string(m.ordered().cell(lifted.start)));
    p.line("end", to_string(m.ordered().cell(end)));
    p.line("sheets", end == lifted.start ? "same" : "swapped");
  }
  return kExitOk;
}

struct DecideFlags {
  TargetFlags target;
  std::string class_text;
  std::optional<std::uint32_t> seed;
  int max_word_len = 8;
};

std::vector<std::string> random_class(const InvolutionGraph& ig, const GraphFile& target, const DecideFlags& f) {
  std::mt19937 rng(*f.seed);
  const int n = 2 * ig.m() + 1;
  std::vector<std::string> out;
  switch (classify_target(target.graph)) {
    case TargetType::interval:
    case TargetType::tree:
      return out;
    case TargetType::circle: {
      std::uniform_int_distribution<int> d(-f.max_word_len, f.max_word_len);
      for (int i = 0; i < n; ++i) out.push_back(std::to_string(d(rng)));
      return out;
    }
    case TargetType::general:
      break;
  }
  const OrderedGraph og = order_graph(subdivide_to_simplicial(target.graph), f.target.root, parse_tree(f.target.tree));
  const int k = static_cast<int>(og.deleted_edges().size());
  for (int i = 0; i < n; ++i) out.push_back(to_string(oracle::random_z_word(rng, k, f.max_word_len)));
  return out;
}

int cmd_decide(const std::string& gamma_path, const std::string& target_path, const std::string& class_path,
               const DecideFlags& flags, Printer& p, OutputFormat format, std::ostream& out) {
  const GraphFile gamma_file = read_graph_file(gamma_path);
  if (gamma_file.tau_vertices.empty()) throw InputError(gamma_path + ": no `tau v` lines");
  const InvolutionGraph ig = make_involution(Graph::from_multigraph(gamma_file.graph), gamma_file);
  const GraphFile target = read_graph_file(target_path);

  std::vector<std::string> entries;
  if (!class_path.empty()) entries = parse_class_text(read_text(class_path));
  if (!flags.class_text.empty()) {
    if (!class_path.empty()) throw InputError("give the class as a file or with --class, not both");
    entries = parse_class_text(flags.class_text);
  }
  if (entries.empty() && flags.seed) entries = random_class(ig, target, flags);
  p.line("class", entries.empty() ? "trivial" : join(entries, "; "));

  TargetOptions opts{flags.target.root, parse_tree(flags.target.tree)};
  const Decision d = decide(ig, target.graph, entries, opts);
  out << format_decision(d, format);
  return d.holds ? kExitOk : kExitFails;
}

int cmd_verify(const std::string& dir, const VerifyOptions& opts, Printer& p, std::ostream& err) {
  const std::vector<CorpusCase> corpus = load_corpus(dir);
  if (corpus.empty()) {
    p.line("cases", "0");
    p.line("result", "0 cases");
    return kExitOk;
  }
  const VerifyReport r = verify_corpus(corpus, opts);
  p.line("cases", std::to_string(r.cases));
  p.line("random graphs", std::to_string(opts.random_graphs));
  p.line("seed", std::to_string(opts.seed));
  for (const auto& c : r.criteria) {
    p.line("criterion " + std::to_string(c.id),
           std::string(c.pass() ? "pass" : "FAIL") + " (" + std::to_string(c.checks) + " checks) " + c.title);
    for (std::size_t i = 0; i < c.failures.size() && i < 20; ++i) err << "  criterion " << c.id << ": " << c.failures[i] << "\n";
  }
  for (const auto& n : r.notes) p.line("note", n);
  p.line("golden", r.golden_diffs.empty() ? "pass" : "FAIL");
  for (const auto& d : r.golden_diffs) err << d << "\n";
  p.line("result", r.pass() ? "pass" : "FAIL");
  return r.pass() ? kExitOk : kExitInternalError;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-strand graph braid groups and the Borsuk-Ulam property for graph maps", "gbu"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "Output format: human or machine")->capture_default_str();

  TargetFlags model_flags;
  std::string model_path;
  bool dump = false;
  auto* model = app.add_subcommand("model", "Configuration complexes, gradient fields and generators of a graph");
  model->add_option("graph", model_path, "Graph file")->required();
  model->add_flag("--dump", dump, "List every cell");
  add_target_flags(model, model_flags);

  TargetFlags map_flags;
  std::string map_path, morphism, word;
  auto* map = app.add_subcommand("map", "Apply iota, theta, p1, conj_sigma, rewrite or lift to a word");
  map->add_option("graph", map_path, "Graph file")->required();
  map->add_option("morphism", morphism, "iota | theta | p1 | conj_sigma | rewrite | lift")->required();
  map->add_option("word", word, "Word such as \"(2,(1,3))*((0,4),1)^-1\"; empty or 1 is the identity");
  add_target_flags(map, map_flags);

  DecideFlags decide_flags;
  std::string gamma_path, target_path, class_path;
  auto* dec = app.add_subcommand("decide", "Decide the Borsuk-Ulam property for a class of maps");
  dec->add_option("gamma", gamma_path, "Source graph file with tau lines")->required();
  dec->add_option("target", target_path, "Target graph file")->required();
  dec->add_option("class-file", class_path, "Class file: one word per line (a, a1, a1', ...)");
  dec->add_option("--class", decide_flags.class_text, "Class entries separated by ';'");
  dec->add_option("--seed", decide_flags.seed, "Draw a random class with this seed when none is given");
  dec->add_option("--max-word-len", decide_flags.max_word_len, "Length bound for random words")->capture_default_str();
  add_target_flags(dec, decide_flags.target);

  VerifyOptions vopts;
  std::string corpus_dir;
  auto* ver = app.add_subcommand("verify", "Run the oracle-equivalence suite over a corpus directory");
  ver->add_option("corpus", corpus_dir, "Directory of .graph files and .census goldens")->required();
  ver->add_option("--seed", vopts.seed, "Seed for random graphs, words and classes")->capture_default_str();
  ver->add_option("--random-graphs", vopts.random_graphs, "Number of random graphs")->capture_default_str();
  ver->add_option("--words", vopts.random_words, "Random P2 words per graph")->capture_default_str();
  ver->add_option("--fuzz", vopts.fuzz_classes, "Fuzzed classes per branch")->capture_default_str();
  ver->add_option("--max-word-len", vopts.max_word_len, "Length bound for random words")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    Printer p(out, fmt);
    if (*model) return cmd_model(model_path, model_flags, dump, p);
    if (*map) return cmd_map(map_path, map_flags, morphism, word, p);
    if (*dec) return cmd_decide(gamma_path, target_path, class_path, decide_flags, p, fmt, out);
    return cmd_verify(corpus_dir, vopts, p, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace gbu
