#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gbu/braid.hpp"
#include "gbu/graph.hpp"
#include "gbu/graph_io.hpp"
#include "gbu/involution.hpp"

namespace gbu::test {

inline GraphFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_file(in, "test");
}

inline Graph graph_of(const std::string& text) { return subdivide_to_simplicial(parse(text).graph); }

inline std::string corpus_path(const std::string& name) {
  return std::string(GBU_CORPUS_DIR) + "/" + name + ".graph";
}

inline Graph corpus_graph(const std::string& name) {
  return subdivide_to_simplicial(read_graph_file(corpus_path(name)).graph);
}

inline InvolutionGraph corpus_involution(const std::string& name) {
  const GraphFile f = read_graph_file(corpus_path(name));
  return make_involution(Graph::from_multigraph(f.graph), f);
}

inline BraidModel corpus_model(const std::string& name) {
  return BraidModel::build(order_graph(corpus_graph(name)));
}

inline ConfigCell vcell(Vertex a, Vertex b) { return ConfigCell::ordered(GCell::vertex(a), GCell::vertex(b)); }

// 0 - 1 - 2 - 3
inline const char* kPath4 = "graph 4\nv 0: 1\nv 1: 0 2\nv 2: 1 3\nv 3: 2\n";
inline const char* kY = "graph 4\nv 0: 1\nv 1: 0 2 3\nv 2: 1\nv 3: 1\n";
inline const char* kTriangle = "graph 3\nv 0: 1 2\nv 1: 0 2\nv 2: 0 1\n";

}  // namespace gbu::test
