#include "gbu/bu_engine.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gbu/errors.hpp"

namespace gbu {

std::string_view to_string(TargetType t) {
  switch (t) {
    case TargetType::interval: return "interval";
    case TargetType::circle: return "circle";
    case TargetType::tree: return "tree";
    case TargetType::general: return "general";
  }
  return "?";
}

std::string_view to_string(Branch b) { return b == Branch::essential ? "essential" : "linear"; }

TargetType classify_target(const MultiGraph& g) {
  if (g.vertex_count() == 0 || !g.is_connected()) throw InputError("target graph must be connected");
  int max_degree = 0;
  bool all_two = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int d = static_cast<int>(g.rotation(v).size());
    max_degree = std::max(max_degree, d);
    all_two = all_two && d == 2;
  }
  if (g.link_count() == g.vertex_count() - 1) return max_degree <= 2 ? TargetType::interval : TargetType::tree;
  if (all_two) return TargetType::circle;
  return TargetType::general;
}

// ---------------------------------------------------------------- classes

std::vector<std::string> parse_class_text(std::string_view text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream parts(line);
    std::string entry;
    while (std::getline(parts, entry, ';')) {
      auto b = entry.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      auto e = entry.find_last_not_of(" \t\r");
      out.push_back(entry.substr(b, e - b + 1));
    }
  }
  return out;
}

HomotopyClass class_from_entries(const std::vector<std::string>& entries, int k) {
  HomotopyClass alpha;
  for (const auto& e : entries) {
    ZWord w = parse_z_word(e);
    for (const auto& l : w)
      if (l.gen.index > k)
        throw InputError("class entry '" + e + "' uses z" + std::to_string(l.gen.index) +
                         " but the target has only " + std::to_string(k) + " deleted edges");
    alpha.words.push_back(std::move(w));
  }
  return alpha;
}

std::vector<long> circle_class_from_entries(const std::vector<std::string>& entries) {
  std::vector<long> out;
  for (const auto& e : entries) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), value);
    if (ec == std::errc() && ptr == e.data() + e.size()) {
      out.push_back(value);
      continue;
    }
    ZWord w = parse_z_word(e);
    for (const auto& l : w)
      if (l.gen.index != 1)
        throw InputError("class entry '" + e + "' uses z" + std::to_string(l.gen.index) +
                         " but a circle has only z1");
    out.push_back(w.exponent_sum(ZGen{1}));
  }
  return out;
}

namespace {

std::string generator_name(std::size_t j) {
  if (j == 0) return "a";
  const std::string i = std::to_string((j + 1) / 2);
  return j % 2 == 1 ? "a" + i : "a" + i + "'";
}

void check_length(std::size_t size, int m) {
  if (size != static_cast<std::size_t>(2 * m + 1))
    throw InputError("class has " + std::to_string(size) + " entries; expected 2m+1 = " +
                     std::to_string(2 * m + 1));
}

const char* ok(bool b) { return b ? "ok" : "FAILED"; }

}  // namespace

CircleDecision classify_circle(const std::vector<long>& alpha, int m) {
  check_length(alpha.size(), m);
  CircleDecision d;
  const long p = alpha[0];
  if (p % 2 == 0) {
    d.reason = "p = " + std::to_string(p) + " is even";
    return d;
  }
  for (int i = 1; i <= m; ++i) {
    if (alpha[2 * i - 1] != alpha[2 * i]) {
      d.reason = "p" + std::to_string(i) + " = " + std::to_string(alpha[2 * i - 1]) + " differs from p" +
                 std::to_string(i) + "' = " + std::to_string(alpha[2 * i]);
      return d;
    }
  }
  d.holds = false;
  d.reason = "p is odd and p_i = p'_i for every i";
  d.psi_c = p;
  for (int i = 1; i <= m; ++i) d.psi_ci.push_back(2 * alpha[2 * i - 1]);

  // B2(S^1) = Z with theta2 = mod 2, P2(S^1) = 2Z inside it, p1 = halving.
  auto parity = [](long x) { return static_cast<int>(((x % 2) + 2) % 2); };
  bool good = parity(d.psi_c) == 1;
  d.transcript.push_back({"psi(c)", std::to_string(d.psi_c)});
  for (int i = 1; i <= m; ++i)
    d.transcript.push_back({"psi(c" + std::to_string(i) + ")", std::to_string(d.psi_ci[i - 1])});
  d.transcript.push_back({"check theta2(psi(c)) = theta1(c)", std::to_string(parity(d.psi_c)) + " = 1 " + ok(parity(d.psi_c) == 1)});
  std::vector<long> phi{2 * d.psi_c};
  for (int i = 1; i <= m; ++i) {
    const long q = d.psi_ci[i - 1];
    good = good && parity(q) == 0;
    d.transcript.push_back({"check theta2(psi(c" + std::to_string(i) + ")) = theta1(c" + std::to_string(i) + ")",
                            std::to_string(parity(q)) + " = 0 " + ok(parity(q) == 0)});
    phi.push_back(q);
    phi.push_back(d.psi_c + q - d.psi_c);
  }
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const long image = phi[j] / 2;
    good = good && image == alpha[j];
    d.transcript.push_back({"check p1(phi(" + generator_name(j) + "))",
                            std::to_string(image) + " = " + std::to_string(alpha[j]) + " " + ok(image == alpha[j])});
  }
  if (!good) throw InternalError("circle witness failed to verify");
  return d;
}

// ---------------------------------------------------------------- key elements

KeyElements build_key_elements(const BraidModel& model) {
  const OrderedGraph& og = model.graph();
  const GeneratorTable& t = model.generators();
  const auto& z = og.deleted_edges();
  const int k = static_cast<int>(z.size());
  if (k == 0) throw InputError("target is a tree; key elements need a deleted edge");

  KeyElements key;
  key.branch = essential_vertex(og) ? Branch::essential : Branch::linear;
  key.sigma = t.sigma;
  key.rho = t.rho;
  for (int i = 0; i < k; ++i) {
    const Edge e = z[i];
    Vertex r = e.lo + 1;
    if (key.branch == Branch::linear && i == 0) {
      if (e.lo > 0) {
        r = 0;
      } else {
        r = e.hi + 1;
        if (r >= og.vertex_count())
          throw InternalError("y1 + 1 is not a vertex, so G would be a circle");
      }
      key.x1_prime = r;
    }
    const ConfigCell lambda = ConfigCell::ordered(GCell::vertex(r), GCell::edge(e));
    if (!t.is_p2(lambda))
      throw InputError("lambda" + std::to_string(i + 1) + " = " + to_string(lambda) +
                       " is not critical for this tree; vertex " + std::to_string(og.label(e.lo)) +
                       " must not be a leaf of the tree");
    key.lambdas.push_back(lambda);
  }

  const CellWord sigma = CellWord::generator(t.sigma);
  const CellWord rho = CellWord::generator(t.rho);
  auto zgen = [](int i) { return ZWord::generator(ZGen{i}); };
  const ZWord z1 = zgen(1);
  const bool linear = key.branch == Branch::linear;
  bool good = true;
  auto check = [&](const std::string& what, const std::string& got, const std::string& want, bool pass) {
    key.transcript.push_back({"check " + what, got + " = " + want + " " + ok(pass)});
    good = good && pass;
  };

  key.transcript.push_back({"branch", std::string(to_string(key.branch))});
  key.transcript.push_back({"sigma", to_string(key.sigma)});
  key.transcript.push_back({"rho", to_string(key.rho)});
  if (key.x1_prime) key.transcript.push_back({"x1'", std::to_string(*key.x1_prime)});

  const CellWord iota_rho = iota(t, rho);
  check("iota(rho) = sigma^2", to_string(iota_rho), to_string(sigma * sigma), iota_rho == sigma * sigma);
  const ZWord want_rho = linear ? z1 : ZWord{};
  check("p1(rho)", to_string(p1(t, rho)), to_string(want_rho), p1(t, rho) == want_rho);

  for (int i = 1; i <= k; ++i) {
    const std::string n = std::to_string(i);
    const CellWord lambda = CellWord::generator(key.lambdas[i - 1]);
    const CellWord prime = conjugate_by_sigma(t, lambda);
    key.lambda_primes.push_back(prime);
    key.transcript.push_back({"lambda" + n, to_string(lambda)});
    key.transcript.push_back({"lambda" + n + "'", to_string(prime)});
    const CellWord conj = sigma * iota(t, lambda) * sigma.inverse();
    check("iota(lambda" + n + "') = sigma*iota(lambda" + n + ")*sigma^-1", to_string(iota(t, prime)),
          to_string(conj), iota(t, prime) == conj);
    check("p1(lambda" + n + ")", to_string(p1(t, lambda)), "1", p1(t, lambda).empty());
    ZWord want = zgen(i);
    if (linear && i > 1) want *= z1.inverse();
    check("p1(lambda" + n + "')", to_string(p1(t, prime)), to_string(want), p1(t, prime) == want);
  }
  if (!good) {
    std::string msg = "key element identities failed:";
    for (const auto& [k2, v] : key.transcript)
      if (v.ends_with("FAILED")) msg += "\n  " + k2 + ": " + v;
    throw InternalError(msg);
  }
  return key;
}

ZWord to_t_alphabet(const ZWord& w) {
  return w.map([](const ZGen& g) {
    ZWord t = ZWord::generator(g);
    if (g.index != 1) t *= ZWord::generator(ZGen{1});
    return t;
  });
}

ZWord from_t_alphabet(const ZWord& t) {
  return t.map([](const ZGen& g) {
    ZWord z = ZWord::generator(g);
    if (g.index != 1) z *= ZWord::generator(ZGen{1}, -1);
    return z;
  });
}

std::string to_t_string(const ZWord& t) {
  return format_word(t, [](const ZGen& g) { return "t" + std::to_string(g.index); });
}

// ---------------------------------------------------------------- witnesses

namespace {

// Evaluates psi on the Reidemeister-Schreier generators, pulls each image
// back to P2 and compares its first-coordinate projection with alpha.
WitnessDiagram finish_witness(const GeneratorTable& t, const AdaptedBasis& basis, CellWord psi_c,
                              std::vector<CellWord> psi_ci, const std::vector<ZWord>& alpha) {
  WitnessDiagram wd;
  wd.psi_c = std::move(psi_c);
  wd.psi_ci = std::move(psi_ci);
  const int m = basis.m();
  bool good = true;
  std::string failures;
  auto check = [&](const std::string& what, const std::string& got, const std::string& want, bool pass) {
    wd.transcript.push_back({"check " + what, got + " = " + want + " " + ok(pass)});
    if (!pass) failures += "\n  " + what + ": got " + got + ", expected " + want;
    good = good && pass;
  };

  wd.transcript.push_back({"psi(c)", to_string(wd.psi_c)});
  for (int i = 1; i <= m; ++i)
    wd.transcript.push_back({"psi(c" + std::to_string(i) + ")", to_string(wd.psi_ci[i - 1])});

  wd.theta_psi_c = theta(wd.psi_c);
  check("theta2(psi(c)) = theta1(c)", std::to_string(wd.theta_psi_c), std::to_string(basis.theta1_c),
        wd.theta_psi_c == basis.theta1_c);
  for (int i = 1; i <= m; ++i) {
    const int th = theta(wd.psi_ci[i - 1]);
    wd.theta_psi_ci.push_back(th);
    const std::string n = std::to_string(i);
    check("theta2(psi(c" + n + ")) = theta1(c" + n + ")", std::to_string(th),
          std::to_string(basis.theta1_ci[i - 1]), th == basis.theta1_ci[i - 1]);
  }

  // psi on the quotient basis e_j, read off from c = e_j or c_i = e_j, c*e_j.
  std::vector<CellWord> psi_e(basis.quotient_basis.rank());
  psi_e[basis.c_generator] = wd.psi_c;
  for (int j = 0, i = 0; j < basis.quotient_basis.rank(); ++j) {
    if (j == basis.c_generator) continue;
    psi_e[j] = basis.e_theta[j] == 0 ? wd.psi_ci[i] : wd.psi_c.inverse() * wd.psi_ci[i];
    ++i;
  }
  for (std::size_t j = 0; j < basis.schreier.size(); ++j) {
    const std::string g = generator_name(j);
    const CellWord b2 = basis.schreier[j].map([&](int e) { return psi_e[e]; });
    const CellWord p2 = sigma_parity_rewrite(t, b2);
    if (iota(t, p2) != b2)
      throw InternalError("rewrite of psi(" + g + ") does not include back: " + to_string(b2));
    wd.phi.push_back(p2);
    const ZWord proj = p1(t, p2);
    wd.p1_phi.push_back(proj);
    wd.transcript.push_back({"phi(" + g + ")", to_string(p2)});
    check("p1(phi(" + g + "))", to_string(proj), to_string(alpha[j]), proj == alpha[j]);
  }
  if (!good) throw InternalError("witness verification failed:" + failures);
  return wd;
}

}  // namespace

WitnessDiagram construct_witness(const HomotopyClass& alpha, const BraidModel& model,
                                 const KeyElements& key, const AdaptedBasis& basis) {
  const int m = basis.m();
  check_length(alpha.words.size(), m);
  const GeneratorTable& t = model.generators();
  const int k = static_cast<int>(key.lambdas.size());
  for (const ZWord& w : alpha.words)
    for (const auto& l : w)
      if (l.gen.index < 1 || l.gen.index > k)
        throw InputError("class uses z" + std::to_string(l.gen.index) + " but the target has k = " +
                         std::to_string(k));

  auto at_lambda = [&](const ZWord& w) {
    return iota(t, w.map([&](const ZGen& g) { return CellWord::generator(key.lambdas[g.index - 1]); }));
  };
  const CellWord sigma = CellWord::generator(t.sigma);
  const CellWord sigma_inv = sigma.inverse();

  CellWord psi_c;
  std::vector<CellWord> psi_ci;
  std::vector<ReportLine> prelude;
  if (key.branch == Branch::essential) {
    psi_c = at_lambda(alpha.words[0]) * sigma;
    for (int i = 1; i <= m; ++i)
      psi_ci.push_back(sigma * at_lambda(alpha.words[2 * i - 1]) * sigma_inv * at_lambda(alpha.words[2 * i]));
  } else {
    const ZWord z1_inv = ZWord::generator(ZGen{1}, -1);
    std::vector<ZWord> ell;
    for (std::size_t j = 0; j < alpha.words.size(); ++j) {
      ell.push_back(to_t_alphabet(alpha.words[j] * z1_inv));
      prelude.push_back({"ell(" + generator_name(j) + ")", to_t_string(ell.back())});
    }
    const CellWord lambda1 = iota(t, CellWord::generator(key.lambdas[0]));
    psi_c = at_lambda(ell[0]) * sigma;
    for (int i = 1; i <= m; ++i)
      psi_ci.push_back(sigma * at_lambda(ell[2 * i - 1]) * sigma * lambda1.inverse() * at_lambda(ell[2 * i]) *
                       lambda1);
  }
  WitnessDiagram wd = finish_witness(t, basis, std::move(psi_c), std::move(psi_ci), alpha.words);
  wd.transcript.insert(wd.transcript.begin(), prelude.begin(), prelude.end());
  return wd;
}

WitnessDiagram classify_tree(const BraidModel& model, const AdaptedBasis& basis) {
  const int m = basis.m();
  const CellWord sigma = CellWord::generator(model.generators().sigma);
  return finish_witness(model.generators(), basis, sigma, std::vector<CellWord>(m),
                        std::vector<ZWord>(2 * m + 1));
}

// ---------------------------------------------------------------- dispatch

Decision decide(const InvolutionGraph& ig, const MultiGraph& target, const std::vector<std::string>& entries,
                const TargetOptions& options) {
  Decision d;
  d.target = classify_target(target);
  d.m = ig.m();
  const AdaptedBasis basis = adapt_basis(ig);
  const int m = d.m;

  d.lines.push_back({"target", std::string(to_string(d.target))});
  d.lines.push_back({"m", std::to_string(m)});
  d.lines.push_back({"quotient basis", [&] {
                       std::string s;
                       for (int j = 0; j < basis.quotient_basis.rank(); ++j)
                         s += (j ? " " : "") + ("e" + std::to_string(j)) + ":" + std::to_string(basis.e_theta[j]);
                       return s;
                     }()});
  d.lines.push_back({"c", to_string(basis.c, "e")});
  for (int i = 1; i <= m; ++i) d.lines.push_back({"c" + std::to_string(i), to_string(basis.c_i[i - 1], "e")});
  for (std::size_t j = 0; j < basis.schreier.size(); ++j)
    d.lines.push_back({generator_name(j), to_string(basis.schreier[j], "e") + " = " + to_string(basis.lifted[j], "g")});

  auto trivial_only = [&](const std::string& why) {
    if (entries.empty()) return;
    check_length(entries.size(), m);
    for (const auto& e : entries)
      if (!parse_z_word(e).empty()) throw InputError("class entry '" + e + "' must be 1: " + why);
  };

  switch (d.target) {
    case TargetType::interval:
      trivial_only("an interval has trivial fundamental group");
      d.holds = true;
      d.reason = "every map to an interval has the Borsuk-Ulam property";
      return d;
    case TargetType::circle: {
      std::vector<long> alpha = circle_class_from_entries(entries);
      if (entries.empty()) alpha.assign(2 * m + 1, 0);
      CircleDecision c = classify_circle(alpha, m);
      d.holds = c.holds;
      d.reason = c.reason;
      d.circle = std::move(c);
      return d;
    }
    case TargetType::tree:
    case TargetType::general:
      break;
  }

  OrderedGraph og = order_graph(subdivide_to_simplicial(target), options.root, options.tree);
  std::string order;
  for (Vertex v = 0; v < og.vertex_count(); ++v)
    order += (v ? " " : "") + std::to_string(v) + "=" + std::to_string(og.label(v));
  d.lines.push_back({"vertex order", order});
  d.k = static_cast<int>(og.deleted_edges().size());
  d.lines.push_back({"k", std::to_string(d.k)});
  BraidModel model = BraidModel::build(std::move(og));

  d.holds = false;
  if (d.target == TargetType::tree) {
    trivial_only("a tree has trivial fundamental group");
    d.reason = "[Gamma, G] is a single class and psi lifts theta1";
    d.lines.push_back({"sigma", to_string(model.generators().sigma)});
    d.witness = classify_tree(model, basis);
    return d;
  }
  KeyElements key = build_key_elements(model);
  HomotopyClass alpha = class_from_entries(entries, d.k);
  if (entries.empty()) alpha.words.assign(2 * m + 1, ZWord{});
  d.branch = key.branch;
  d.reason = "psi and phi fit in the commutative diagram";
  d.witness = construct_witness(alpha, model, key, basis);
  d.key = std::move(key);
  return d;
}

std::string format_decision(const Decision& d, OutputFormat format) {
  std::vector<ReportLine> lines = d.lines;
  if (d.key) lines.insert(lines.end(), d.key->transcript.begin(), d.key->transcript.end());
  lines.push_back({"decision", d.holds ? "holds" : "fails"});
  lines.push_back({"reason", d.reason});
  if (d.circle) lines.insert(lines.end(), d.circle->transcript.begin(), d.circle->transcript.end());
  if (d.witness) lines.insert(lines.end(), d.witness->transcript.begin(), d.witness->transcript.end());

  std::string out;
  for (const auto& [key, value] : lines) {
    if (format == OutputFormat::machine) {
      if (key.starts_with("check ")) {
        out += "check=" + key.substr(6) + ": " + value + "\n";
        continue;
      }
      std::string k = key;
      std::replace(k.begin(), k.end(), ' ', '_');
      out += k + "=" + value + "\n";
    } else {
      out += key + ": " + value + "\n";
    }
  }
  return out;
}

}  // namespace gbu
