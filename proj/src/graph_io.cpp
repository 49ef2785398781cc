#include "gbu/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gbu/errors.hpp"

namespace gbu {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, const std::string& source, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(source, line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(source, line, "expected an integer, got '" + tok + "'");
  return value;
}

LabelEdge parse_label_edge(const std::string& tok, const std::string& source, int line) {
  auto dash = tok.find('-', 1);
  if (dash == std::string::npos) fail(source, line, "expected an edge u-v, got '" + tok + "'");
  return {parse_int(tok.substr(0, dash), source, line),
          parse_int(tok.substr(dash + 1), source, line)};
}

}  // namespace

GraphFile parse_graph_file(std::istream& in, const std::string& source) {
  GraphFile out;
  int declared = -1;
  int header_line = 0;
  std::vector<int> labels;
  std::map<int, int> index_of;  // label -> internal index
  std::vector<std::vector<int>> neighbor_labels;
  std::vector<int> neighbor_line;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    for (char& ch : raw)
      if (ch == ',' || ch == ':') ch = ' ';
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);

    if (kw == "graph") {
      if (declared >= 0) fail(source, line, "duplicate graph header");
      if (toks.size() != 1) fail(source, line, "expected 'graph <n>'");
      declared = parse_int(toks[0], source, line);
      if (declared <= 0) fail(source, line, "vertex count must be positive");
      header_line = line;
    } else if (kw == "v") {
      if (declared < 0) fail(source, line, "vertex line before 'graph <n>' header");
      if (toks.empty()) fail(source, line, "expected 'v <id>: <neighbors>'");
      const int id = parse_int(toks[0], source, line);
      if (id < 0) fail(source, line, "vertex ids must be non-negative");
      if (!index_of.emplace(id, static_cast<int>(labels.size())).second)
        fail(source, line, "vertex " + toks[0] + " declared twice");
      labels.push_back(id);
      std::vector<int> nbrs;
      for (std::size_t i = 1; i < toks.size(); ++i) nbrs.push_back(parse_int(toks[i], source, line));
      neighbor_labels.push_back(std::move(nbrs));
      neighbor_line.push_back(line);
    } else if (kw == "tau") {
      if (toks.size() != 3 || (toks[0] != "v" && toks[0] != "e"))
        fail(source, line, "expected 'tau v <id> <id>' or 'tau e <u>-<v> <u'>-<v'>'");
      if (toks[0] == "v")
        out.tau_vertices.push_back(
            {parse_int(toks[1], source, line), parse_int(toks[2], source, line)});
      else
        out.tau_edges.push_back(
            {parse_label_edge(toks[1], source, line), parse_label_edge(toks[2], source, line)});
    } else {
      fail(source, line, "unknown keyword '" + kw + "'");
    }
  }
  if (declared < 0) fail(source, line, "missing 'graph <n>' header");
  if (static_cast<int>(labels.size()) != declared)
    fail(source, header_line,
         "header declares " + std::to_string(declared) + " vertices, file lists " +
             std::to_string(labels.size()));

  std::vector<std::vector<Vertex>> rotation(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v)
    for (int nb : neighbor_labels[v]) {
      auto it = index_of.find(nb);
      if (it == index_of.end())
        fail(source, neighbor_line[v], "unknown neighbor " + std::to_string(nb));
      rotation[v].push_back(it->second);
    }
  try {
    out.graph = MultiGraph(std::move(rotation), labels);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graph_file(in, path);
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == ';') ch = ' ';
  std::istringstream in(s);
  std::vector<std::pair<int, int>> out;
  for (std::string tok; in >> tok;) {
    auto e = parse_label_edge(tok, "--tree", 1);
    out.push_back({e.a, e.b});
  }
  return out;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "v " << g.label(v) << ":";
    for (Vertex w : g.neighbors(v)) out << " " << g.label(w);
    out << "\n";
  }
  return out.str();
}

}  // namespace gbu
