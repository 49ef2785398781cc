#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbu/braid.hpp"
#include "gbu/graph.hpp"
#include "gbu/involution.hpp"

namespace gbu {

/// One `key: value` line of a report.
using ReportLine = std::pair<std::string, std::string>;

enum class TargetType { interval, circle, tree, general };
std::string_view to_string(TargetType t);

/// Homeomorphism type of a connected graph, up to smoothing degree-2 vertices.
TargetType classify_target(const MultiGraph& g);

/// A class in [Gamma, G]: one entry per generator a, a_1, a'_1, ..., a_m, a'_m.
struct HomotopyClass {
  std::vector<ZWord> words;
};

/// Parses one entry per non-empty line (`#` comments): `z`-words, `1`, or,
/// for circle targets, integers.
std::vector<std::string> parse_class_text(std::string_view text);
/// Reads z-words; InputError when a letter exceeds z_k.
HomotopyClass class_from_entries(const std::vector<std::string>& entries, int k);
/// Reads integers (a word in z1 counts its exponent sum).
std::vector<long> circle_class_from_entries(const std::vector<std::string>& entries);

struct CircleDecision {
  bool holds = true;
  std::string reason;
  // Witness when the property fails: psi(c) = p, psi(c_i) = 2 p_i in B2(S^1) = Z.
  long psi_c = 0;
  std::vector<long> psi_ci;
  std::vector<ReportLine> transcript;
};

/// Fails iff p is odd and p_i = p'_i for every i.
CircleDecision classify_circle(const std::vector<long>& alpha, int m);

enum class Branch { essential, linear };
std::string_view to_string(Branch b);

/// sigma, rho and lambda_1..lambda_k with the identities they satisfy.
struct KeyElements {
  Branch branch = Branch::essential;
  ConfigCell sigma;
  ConfigCell rho;
  std::vector<ConfigCell> lambdas;
  std::vector<CellWord> lambda_primes;  // sigma lambda_i sigma^{-1} in P2
  std::optional<Vertex> x1_prime;       // linear branch only
  std::vector<ReportLine> transcript;
};

/// Throws InputError when G has no deleted edge or the tree makes some
/// lambda_i non-critical; InternalError when an identity fails.
KeyElements build_key_elements(const BraidModel& model);

/// t_1 = z_1, t_i = z_i z_1^{-1}: rewrites a z-word in the t-alphabet.
ZWord to_t_alphabet(const ZWord& w);
ZWord from_t_alphabet(const ZWord& t);
std::string to_t_string(const ZWord& t);

struct WitnessDiagram {
  CellWord psi_c;
  std::vector<CellWord> psi_ci;
  std::vector<CellWord> phi;      // images of a, a_1, a'_1, ... in P2
  std::vector<ZWord> p1_phi;
  int theta_psi_c = 0;
  std::vector<int> theta_psi_ci;
  std::vector<ReportLine> transcript;
};

/// Builds (psi, phi) for a class over a non-tree target and checks
/// theta2 psi = theta1 and p1 phi = alpha; InternalError on mismatch.
WitnessDiagram construct_witness(const HomotopyClass& alpha, const BraidModel& model,
                                 const KeyElements& key, const AdaptedBasis& basis);

/// Tree targets: psi(c) = sigma, psi(c_i) = 1.
WitnessDiagram classify_tree(const BraidModel& model, const AdaptedBasis& basis);

struct TargetOptions {
  std::optional<int> root;
  std::optional<std::vector<std::pair<int, int>>> tree;
};

struct Decision {
  TargetType target = TargetType::general;
  bool holds = true;
  std::string reason;
  int m = 0;
  int k = 0;
  std::optional<Branch> branch;
  std::optional<CircleDecision> circle;
  std::optional<WitnessDiagram> witness;
  std::optional<KeyElements> key;
  std::vector<ReportLine> lines;  // case data ahead of the witness
};

/// Dispatches on the target type. `entries` is the raw class; an empty list
/// means the trivial class.
Decision decide(const InvolutionGraph& ig, const MultiGraph& target,
                const std::vector<std::string>& entries, const TargetOptions& options = {});

enum class OutputFormat { human, machine };
/// Stable-ordered certificate lines.
std::string format_decision(const Decision& d, OutputFormat format);

}  // namespace gbu
