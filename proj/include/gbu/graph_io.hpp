#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "gbu/graph.hpp"

namespace gbu {

struct LabelEdge {
  int a;
  int b;
};

/// Contents of a graph file:
///
///     graph <n>
///     v <id>: <neighbors in embedding order>
///     tau v <id> <id>
///     tau e <u>-<v> <u'>-<v'>
///
/// `#` starts a comment. Ids are the file's vertex labels.
struct GraphFile {
  MultiGraph graph;
  std::vector<std::pair<int, int>> tau_vertices;
  std::vector<std::pair<LabelEdge, LabelEdge>> tau_edges;
};

/// Throws InputError with `source:line:` prefixes on malformed input.
GraphFile parse_graph_file(std::istream& in, const std::string& source = "<input>");
GraphFile read_graph_file(const std::string& path);

/// Parses `u-v,u-v,...` (commas or whitespace between edges).
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text);

/// Writes `g` in the graph file format.
std::string format_graph(const Graph& g);

}  // namespace gbu
