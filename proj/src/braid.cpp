#include "gbu/braid.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <variant>

#include "gbu/errors.hpp"

namespace gbu {

std::string to_string(const ZWord& w) {
  return format_word(w, [](const ZGen& z) { return "z" + std::to_string(z.index); });
}

bool GeneratorTable::is_p2(const ConfigCell& c) const {
  return std::binary_search(p2.begin(), p2.end(), c);
}

bool GeneratorTable::is_b2(const ConfigCell& c) const {
  return std::binary_search(b2.begin(), b2.end(), c);
}

BraidModel BraidModel::build(OrderedGraph og) {
  BraidModel m;
  m.og_ = std::move(og);
  m.ordered_ = build_ordered(m.og_);
  m.unordered_ = build_unordered(m.og_);
  m.ordered_field_ = build_field(m.og_, m.ordered_);
  m.unordered_field_ = build_field(m.og_, m.unordered_);
  const ConfigCell connecting = select_connecting_cell(m.og_);
  m.trees_ = build_trees(m.og_, m.ordered_, m.ordered_field_, m.unordered_, m.unordered_field_,
                         connecting);

  GeneratorTable& t = m.table_;
  t.connecting = connecting;
  t.sigma = project(connecting);
  t.rho = connecting.swapped();
  for (int id : m.ordered_field_.critical_cells(1))
    if (m.ordered_.cell(id) != connecting) t.p2.push_back(m.ordered_.cell(id));
  for (int id : m.unordered_field_.critical_cells(1)) t.b2.push_back(m.unordered_.cell(id));
  std::sort(t.p2.begin(), t.p2.end());
  std::sort(t.b2.begin(), t.b2.end());
  t.z = m.og_.deleted_edges();
  if (!t.is_p2(t.rho) || !t.is_b2(t.sigma))
    throw InternalError("rho or sigma is not a generator");
  return m;
}

EdgePath represent(const BraidModel& m, const ConfigCell& g) {
  const bool ordered = g.is_ordered();
  const CellComplex& cx = ordered ? m.ordered() : m.unordered();
  const GradientField& field = ordered ? m.ordered_field() : m.unordered_field();
  const SpanningTree& tree = ordered ? m.trees().dt : m.trees().udt;
  const int id = cx.id_of(g);
  if (g.dim() != 1 || field.status(id) != CellStatus::critical)
    throw InputError(to_string(g) + " is not a critical 1-cell");
  if (tree.contains(id)) throw InputError(to_string(g) + " lies in the maximal tree");
  EdgePath loop = tree.beta(cx.initial(id));
  loop.steps.push_back({id, true});
  loop.append(tree.beta(cx.terminal(id)).reversed(cx));
  return loop;
}

namespace {

// A 1-cell read as vertex r and edge (s,t).
struct OneCell {
  Vertex r, s, t;
  bool vertex_first;
};

OneCell parts(const ConfigCell& c) {
  if (c.dim() != 1) throw InputError(to_string(c) + " is not a 1-cell");
  const bool vf = c.ing[0].is_vertex();
  const GCell v = vf ? c.ing[0] : c.ing[1];
  const GCell e = vf ? c.ing[1] : c.ing[0];
  return {v.lo, e.lo, e.hi, vf};
}

ConfigCell vertex_first(const OneCell& p) {
  return ConfigCell::ordered(GCell::vertex(p.r), GCell::edge(p.s, p.t));
}
ConfigCell edge_first(const OneCell& p) {
  return ConfigCell::ordered(GCell::edge(p.s, p.t), GCell::vertex(p.r));
}
ConfigCell unordered_of(const OneCell& p) {
  return ConfigCell::unordered(GCell::vertex(p.r), GCell::edge(p.s, p.t));
}

CellWord gen(const ConfigCell& c, int exp = 1) { return CellWord::generator(c, exp); }

// The connecting cell is a tree edge of D2, hence trivial in P2.
CellWord p2_gen(const GeneratorTable& t, const ConfigCell& c, int exp = 1) {
  if (c == t.connecting) return {};
  return gen(c, exp);
}

[[noreturn]] void unknown_generator(const ConfigCell& c, const std::vector<ConfigCell>& alphabet,
                                    std::string_view group) {
  std::string msg = "unknown " + std::string(group) + " generator " + to_string(c);
  std::vector<std::string> close;
  for (const auto& g : alphabet)
    if (g.ing[0] == c.ing[0] || g.ing[1] == c.ing[1] || g.ing[0] == c.ing[1] ||
        g.ing[1] == c.ing[0])
      close.push_back(to_string(g));
  if (close.empty())
    for (const auto& g : alphabet) close.push_back(to_string(g));
  if (close.size() > 8) close.resize(8);
  if (!close.empty()) {
    msg += "; did you mean:";
    for (const auto& s : close) msg += " " + s;
  }
  throw InputError(msg);
}

void require_p2(const GeneratorTable& t, const ConfigCell& c) {
  if (!t.is_p2(c)) unknown_generator(c, t.p2, "P2");
}

CellWord iota_letter(const GeneratorTable& t, const ConfigCell& c) {
  require_p2(t, c);
  const OneCell p = parts(c);
  const CellWord g = gen(unordered_of(p));
  const CellWord s = gen(t.sigma);
  const CellWord si = gen(t.sigma, -1);
  if (p.vertex_first) {
    if (p.r < p.s) return g;
    if (p.r < p.t) return si * g;
    return si * g * s;
  }
  if (p.r < p.s) return si * g * s;
  if (p.r < p.t) return g * s;
  return g;
}

CellWord conjugate_letter(const GeneratorTable& t, const ConfigCell& c) {
  if (c == t.connecting)
    throw InputError("cannot conjugate the connecting cell " + to_string(c) +
                     "; it is not a P2 generator");
  require_p2(t, c);
  const OneCell p = parts(c);
  const CellWord rho = gen(t.rho);
  const CellWord rho_inv = gen(t.rho, -1);
  const CellWord vf = p2_gen(t, vertex_first(p));
  const CellWord ef = p2_gen(t, edge_first(p));
  if (p.r < p.s) return p.vertex_first ? rho * ef * rho_inv : vf;
  if (p.r < p.t) {
    if (p.vertex_first) return ef * rho_inv;
    if (vertex_first(p) == t.connecting) return rho;
    return rho * vf;
  }
  return p.vertex_first ? ef : rho * vf * rho_inv;
}

}  // namespace

void require_generators(const GeneratorTable& t, const CellWord& w) {
  for (const auto& l : w) {
    if (l.gen.is_ordered() && l.gen != t.connecting) require_p2(t, l.gen);
    if (!l.gen.is_ordered() && !t.is_b2(l.gen)) unknown_generator(l.gen, t.b2, "B2");
  }
}

CellWord iota(const GeneratorTable& t, const CellWord& w) {
  return w.map([&](const ConfigCell& c) { return iota_letter(t, c); });
}

CellWord conjugate_by_sigma(const GeneratorTable& t, const CellWord& w) {
  return w.map([&](const ConfigCell& c) { return conjugate_letter(t, c); });
}

int theta(const CellWord& w) {
  int bit = 0;
  for (const auto& l : w) {
    const OneCell p = parts(l.gen);
    bit ^= (p.s < p.r && p.r < p.t) ? 1 : 0;
  }
  return bit;
}

ZWord p1(const GeneratorTable& t, const CellWord& w) {
  return w.map([&](const ConfigCell& c) -> ZWord {
    const OneCell p = parts(c);
    if (p.vertex_first) return {};
    const Edge e{p.s, p.t};
    for (std::size_t i = 0; i < t.z.size(); ++i)
      if (t.z[i] == e) return ZWord::generator(ZGen{static_cast<int>(i) + 1});
    return {};
  });
}

CellWord sigma_parity_rewrite(const GeneratorTable& t, const CellWord& w) {
  if (theta(w) != 0)
    throw InputError("word " + to_string(w) + " has theta = 1, so it is not in P2");
  CellWord out;
  int parity = 0;
  for (const auto& l : w) {
    if (!t.is_b2(l.gen)) unknown_generator(l.gen, t.b2, "B2");
    const OneCell p = parts(l.gen);
    const bool odd = p.s < p.r && p.r < p.t;
    if (!odd) {
      // iota(h) == g for h = (r,(s,t)) if r < s, ((s,t),r) if t < r
      const ConfigCell h = p.r < p.s ? vertex_first(p) : edge_first(p);
      const CellWord factor = gen(h, l.exp);
      out *= parity == 0 ? factor : conjugate_by_sigma(t, factor);
      continue;
    }
    // g = iota(((s,t),r)) sigma^{-1} = sigma iota((r,(s,t)))
    const CellWord vf = p2_gen(t, vertex_first(p));
    const CellWord ef = p2_gen(t, edge_first(p));
    const CellWord rho = gen(t.rho);
    const CellWord rho_inv = gen(t.rho, -1);
    if (parity == 0)  // g^e sigma^{-1}
      out *= l.exp > 0 ? ef * rho_inv : vf.inverse() * rho_inv;
    else  // sigma g^e
      out *= l.exp > 0 ? rho * vf : rho * ef.inverse();
    parity ^= 1;
  }
  return out;
}

// ------------------------------------------------------------------- parsing

namespace {

struct ParsedLetter {
  std::variant<ConfigCell, ZGen> gen;
  int exp;
};

class WordParser {
 public:
  explicit WordParser(std::string_view text) : s_(text) {}

  std::vector<ParsedLetter> parse() {
    std::vector<ParsedLetter> out;
    skip();
    if (done()) return out;
    if (peek() == '1') {
      std::size_t save = i_;
      ++i_;
      skip();
      if (done()) return out;
      i_ = save;
    }
    while (true) {
      skip();
      auto g = factor();
      int exp = 1;
      skip();
      if (!done() && peek() == '^') {
        ++i_;
        skip();
        exp = integer();
      }
      out.push_back({g, exp});
      skip();
      if (done()) break;
      if (peek() == '*') ++i_;
    }
    return out;
  }

 private:
  bool done() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("word syntax error at column " + std::to_string(i_ + 1) + ": " + what +
                     " in '" + std::string(s_) + "'");
  }
  void expect(char c) {
    skip();
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  int integer() {
    skip();
    std::size_t start = i_;
    if (!done() && (peek() == '-' || peek() == '+')) ++i_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (i_ == start || (i_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, i_ - start)));
  }
  GCell ingredient() {
    skip();
    if (!done() && peek() == '(') {
      ++i_;
      int a = integer();
      expect(',');
      int b = integer();
      expect(')');
      if (a == b || a < 0 || b < 0) fail("bad edge");
      return GCell::edge(a, b);
    }
    int v = integer();
    if (v < 0) fail("negative vertex");
    return GCell::vertex(v);
  }
  std::variant<ConfigCell, ZGen> factor() {
    if (done()) fail("expected a generator");
    const char c = peek();
    if (c == 'z' || c == 'Z') {
      ++i_;
      int k = integer();
      if (k <= 0) fail("z generators are numbered from 1");
      return ZGen{k};
    }
    if (c != '(' && c != '{') fail("expected a generator");
    ++i_;
    GCell a = ingredient();
    expect(',');
    GCell b = ingredient();
    expect(c == '(' ? ')' : '}');
    if (!a.disjoint(b)) fail("ingredients intersect");
    return c == '(' ? ConfigCell::ordered(a, b) : ConfigCell::unordered(a, b);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

CellWord parse_cell_word(std::string_view text) {
  CellWord w;
  for (const auto& l : WordParser(text).parse()) {
    const auto* c = std::get_if<ConfigCell>(&l.gen);
    if (!c) throw InputError("expected a cell generator, got a z generator in '" +
                             std::string(text) + "'");
    w *= CellWord::generator(*c).pow(l.exp);
  }
  return w;
}

ZWord parse_z_word(std::string_view text) {
  ZWord w;
  for (const auto& l : WordParser(text).parse()) {
    const auto* z = std::get_if<ZGen>(&l.gen);
    if (!z) throw InputError("expected a z generator in '" + std::string(text) + "'");
    w *= ZWord::generator(*z).pow(l.exp);
  }
  return w;
}

}  // namespace gbu
