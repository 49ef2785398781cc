#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbu/graph.hpp"
#include "gbu/graph_io.hpp"

namespace gbu {

/// A corpus entry: target graphs have no tau lines, source graphs do.
struct CorpusCase {
  std::string name;
  GraphFile file;
  std::optional<std::string> golden;  // expected census text
};

/// Reads `*.graph` files (and `<name>.census` goldens) in name order.
std::vector<CorpusCase> load_corpus(const std::string& dir);

struct CriterionResult {
  int id = 0;
  std::string title;
  long checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty() && checks > 0; }
};

struct VerifyOptions {
  std::uint32_t seed = 1;
  int random_graphs = 20;
  int random_words = 1000;
  int fuzz_classes = 500;
  int max_word_len = 8;
  int circle_bound = 7;
  int circle_range = 3;
  int tree_attempts = 200;
};

struct VerifyReport {
  int cases = 0;
  std::array<CriterionResult, 10> criteria;
  std::vector<std::string> golden_diffs;
  std::vector<std::string> notes;
  bool pass() const;
};

/// Census lines for D2 and UD2 as in the `.census` goldens.
std::string census_text(const Graph& g, std::optional<int> root = std::nullopt);

/// Runs the oracle-equivalence suite over the corpus plus seeded random graphs.
VerifyReport verify_corpus(const std::vector<CorpusCase>& corpus, const VerifyOptions& options);

}  // namespace gbu
