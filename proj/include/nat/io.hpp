#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nat/graph.hpp"
#include "nat/group.hpp"
#include "nat/metric.hpp"
#include "nat/rational.hpp"

namespace nat {

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------
//   metric file:  "metric n" / n label lines / n rows of n rationals
//   graph file:   "graph n simple|weighted" / optional "label <i> <text>"
//                 lines / edge lines "u v [p/q]"
//   table file:   "n" / n rows of n element indices
//   perms file:   one permutation image array per line

namespace detail {
inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}
}  // namespace detail

inline MetricSpace read_metric(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError("empty metric file");
  auto head = detail::split_ws(lines[0]);
  if (head.size() != 2 || head[0] != "metric") throw ParseError("metric file must start with 'metric n'");
  int n = std::stoi(head[1]);
  if (static_cast<int>(lines.size()) != 1 + n + n) throw ParseError("metric file truncated");
  std::vector<std::string> labels(lines.begin() + 1, lines.begin() + 1 + n);
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    auto row = detail::split_ws(lines[1 + n + i]);
    if (static_cast<int>(row.size()) != n) throw ParseError("metric row has wrong length");
    for (int j = 0; j < n; ++j) d[i][j] = parse_rational(row[j]);
  }
  return MetricSpace(std::move(d), std::move(labels));
}

inline void write_metric(std::ostream& out, const MetricSpace& m) {
  out << "metric " << m.points() << "\n";
  for (const auto& l : m.labels()) out << l << "\n";
  for (int i = 0; i < m.points(); ++i) {
    for (int j = 0; j < m.points(); ++j) out << (j ? " " : "") << to_string(m.dist(i, j));
    out << "\n";
  }
}

inline WeightedGraph read_graph(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError("empty graph file");
  auto head = detail::split_ws(lines[0]);
  if (head.size() < 2 || head[0] != "graph") throw ParseError("graph file must start with 'graph n'");
  int n = std::stoi(head[1]);
  WeightedGraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = detail::split_ws(lines[i]);
    if (tok.empty()) continue;
    if (tok[0] == "label") {
      if (tok.size() < 3) throw ParseError("label line needs an index and a name");
      std::string name = lines[i].substr(lines[i].find(tok[1]) + tok[1].size() + 1);
      g.set_label(std::stoi(tok[1]), name);
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3) throw ParseError("edge line must be 'u v [weight]'");
    Rat w = tok.size() == 3 ? parse_rational(tok[2]) : Rat(1);
    g.add_edge(std::stoi(tok[0]), std::stoi(tok[1]), w);
  }
  return g;
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << g.vertices() << " " << (g.is_simple() ? "simple" : "weighted") << "\n";
  for (int v = 0; v < g.vertices(); ++v)
    if (g.labels()[v] != std::to_string(v)) out << "label " << v << " " << g.labels()[v] << "\n";
  for (auto [u, v, w] : g.edges()) {
    out << u << " " << v;
    if (w != Rat(1)) out << " " << to_string(w);
    out << "\n";
  }
}

inline GroupTable read_group_table(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError("empty table file");
  int n = std::stoi(lines[0]);
  if (static_cast<int>(lines.size()) != 1 + n) throw ParseError("table file truncated");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    auto row = detail::split_ws(lines[1 + i]);
    if (static_cast<int>(row.size()) != n) throw ParseError("table row has wrong length");
    for (int j = 0; j < n; ++j) t[i][j] = std::stoi(row[j]);
  }
  return GroupTable(std::move(t));
}

inline GroupTable read_group_from_perms(std::istream& in) {
  auto lines = detail::read_lines(in);
  std::vector<Permutation> gens;
  for (const auto& line : lines) {
    auto tok = detail::split_ws(line);
    std::vector<int> im;
    for (const auto& t : tok) im.push_back(std::stoi(t));
    gens.push_back(Permutation(std::move(im)));
  }
  if (gens.empty()) throw ParseError("perms file has no permutations");
  return group_from_permutations(PermGroup::generate(gens));
}

inline std::string dot_export(const WeightedGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertices(); ++v)
    os << "  " << v << " [label=\"" << g.labels()[v] << "\"];\n";
  for (auto [u, v, w] : g.edges()) {
    os << "  " << u << " -- " << v;
    if (w != Rat(1)) os << " [label=\"" << to_string(w) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Group mini-grammar
// ---------------------------------------------------------------------------
//   Zn | Dn | Q8 | Dicn | Sn | An | E(p,k) | LL(n) | A x B
//   sd(N,K,gen->[imageperm],...)  |  table:<file>  |  perms:<file>

inline GroupTable parse_group(const std::string& spec);

/// Extends generator images (K-generator g acts as the given automorphism of
/// N) to the full homomorphism K -> Aut(N), verifying consistency:
/// action(k1*k2) = action(k1) after action(k2).
inline std::vector<Permutation> action_from_generator_images(
    const GroupTable& N, const GroupTable& K,
    const std::vector<std::pair<int, Permutation>>& gen_images) {
  if (gen_images.empty()) throw InvalidInput("semidirect action needs at least one generator image");
  std::vector<std::optional<Permutation>> action(K.order());
  action[K.identity()] = Permutation::identity(N.order());
  for (;;) {
    bool changed = false;
    for (int k = 0; k < K.order(); ++k) {
      if (!action[k]) continue;
      for (const auto& [g, img] : gen_images) {
        int kg = K.mul(k, g);
        Permutation val = compose(img, *action[k]);
        if (!action[kg]) {
          action[kg] = val;
          changed = true;
        } else if (!(*action[kg] == val)) {
          throw InvalidInput("semidirect action: generator images are inconsistent over the base");
        }
      }
    }
    if (!changed) break;
  }
  std::vector<Permutation> full;
  for (int k = 0; k < K.order(); ++k) {
    if (!action[k])
      throw InvalidInput("semidirect action: the listed generators do not generate the base group");
    full.push_back(*action[k]);
  }
  return full;
}

/// Parses "g->[i0,i1,...],h->[...]" into generator-image pairs.
inline std::vector<std::pair<int, Permutation>> parse_action_items(const std::string& spec) {
  std::vector<std::pair<int, Permutation>> items;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < spec.size() && (std::isspace(static_cast<unsigned char>(spec[pos])) || spec[pos] == ','))
      ++pos;
  };
  while (skip(), pos < spec.size()) {
    std::size_t arrow = spec.find("->", pos);
    if (arrow == std::string::npos) throw ParseError("action item must look like g->[perm]");
    int g = std::stoi(spec.substr(pos, arrow - pos));
    std::size_t open = spec.find('[', arrow);
    std::size_t close = spec.find(']', open);
    if (open == std::string::npos || close == std::string::npos)
      throw ParseError("action item must look like g->[perm]");
    std::vector<int> im;
    std::string body = spec.substr(open + 1, close - open - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) im.push_back(std::stoi(tok));
    items.emplace_back(g, Permutation(std::move(im)));
    pos = close + 1;
  }
  if (items.empty()) throw ParseError("empty action specification");
  return items;
}

namespace detail {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in group expression");
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number in group expression");
    return std::stoi(s.substr(start, pos - start));
  }
  std::string until_balanced_comma_or_close() {
    skip_ws();
    int depth = 0;
    std::size_t start = pos;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos;
    }
    return s.substr(start, pos - start);
  }
};

inline GroupTable parse_group_expr(Cursor& cur);

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

inline GroupTable parse_group_term(Cursor& cur) {
  cur.skip_ws();
  const std::string& s = cur.s;
  std::size_t& pos = cur.pos;
  auto starts = [&](const std::string& kw) {
    return s.compare(pos, kw.size(), kw) == 0;
  };
  if (cur.peek() == '(') {
    cur.expect('(');
    GroupTable g = parse_group_expr(cur);
    cur.expect(')');
    return g;
  }
  if (starts("table:")) {
    pos += 6;
    std::string path = s.substr(pos);
    pos = s.size();
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file: " + path);
    return read_group_table(in);
  }
  if (starts("perms:")) {
    pos += 6;
    std::string path = s.substr(pos);
    pos = s.size();
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open perms file: " + path);
    return read_group_from_perms(in);
  }
  if (starts("sd(")) {
    pos += 3;
    std::string nspec = cur.until_balanced_comma_or_close();
    cur.expect(',');
    std::string kspec = cur.until_balanced_comma_or_close();
    GroupTable N = parse_group(nspec);
    GroupTable K = parse_group(kspec);
    // generator -> automorphism items
    std::vector<std::pair<int, Permutation>> gen_images;
    while (cur.eat(',')) {
      int g = cur.number();
      cur.expect('-');
      cur.expect('>');
      cur.expect('[');
      std::vector<int> im;
      im.push_back(cur.number());
      while (cur.eat(',')) im.push_back(cur.number());
      cur.expect(']');
      gen_images.emplace_back(g, Permutation(std::move(im)));
    }
    cur.expect(')');
    return semidirect_product(N, K, action_from_generator_images(N, K, gen_images));
  }
  if (starts("LL(")) {
    pos += 3;
    int n = cur.number();
    cur.expect(')');
    return lamplighter_group(n);
  }
  if (starts("E(")) {
    pos += 2;
    int p = cur.number();
    cur.expect(',');
    int k = cur.number();
    cur.expect(')');
    return elementary_abelian_group(p, k);
  }
  if (starts("Dic")) {
    pos += 3;
    return dicyclic_group(cur.number());
  }
  if (starts("Q8")) {
    pos += 2;
    return quaternion_group();
  }
  if (starts("Z")) {
    pos += 1;
    return cyclic_group(cur.number());
  }
  if (starts("D")) {
    pos += 1;
    return dihedral_group(cur.number());
  }
  if (starts("S")) {
    pos += 1;
    return symmetric_group(cur.number());
  }
  if (starts("A")) {
    pos += 1;
    return alternating_group(cur.number());
  }
  throw ParseError("unrecognized group expression near '" + s.substr(pos) + "'");
}

inline GroupTable parse_group_expr(Cursor& cur) {
  GroupTable g = parse_group_term(cur);
  for (;;) {
    cur.skip_ws();
    if (cur.peek() == 'x') {
      ++cur.pos;
      GroupTable h = parse_group_term(cur);
      g = direct_product(g, h);
    } else {
      break;
    }
  }
  return g;
}

}  // namespace detail

inline GroupTable parse_group(const std::string& spec) {
  detail::Cursor cur{spec};
  GroupTable g = detail::parse_group_expr(cur);
  if (!cur.eof()) throw ParseError("trailing input in group expression: '" + spec + "'");
  return g;
}

// ---------------------------------------------------------------------------
// Graph mini-grammar
// ---------------------------------------------------------------------------
//   Cn | Kn | Pn | K33 | prism(n) | octahedron | trunctet | truncicosa |
//   cube(k) | path(n) | ball(z|dinf|free(r)|fd(r)|psl2z, radius) |
//   gfile:<path>

inline WeightedGraph parse_graph(const std::string& spec) {
  detail::Cursor cur{spec};
  const std::string& s = cur.s;
  std::size_t& pos = cur.pos;
  cur.skip_ws();
  auto starts = [&](const std::string& kw) { return s.compare(pos, kw.size(), kw) == 0; };
  auto finish = [&](WeightedGraph g) {
    if (!cur.eof()) throw ParseError("trailing input in graph expression: '" + spec + "'");
    return g;
  };
  if (starts("gfile:")) {
    std::string path = s.substr(pos + 6);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
  }
  if (starts("K33")) {
    pos += 3;
    return finish(complete_bipartite_graph(3, 3));
  }
  if (starts("prism(")) {
    pos += 6;
    int n = cur.number();
    cur.expect(')');
    return finish(prism_graph(n));
  }
  if (starts("octahedron")) {
    pos += 10;
    return finish(octahedron_graph());
  }
  if (starts("trunctet")) {
    pos += 8;
    return finish(truncated_tetrahedron_graph());
  }
  if (starts("truncicosa")) {
    pos += 10;
    return finish(truncated_icosahedron_graph());
  }
  if (starts("cube(")) {
    pos += 5;
    int k = cur.number();
    cur.expect(')');
    return finish(hypercube_graph(k));
  }
  if (starts("path(")) {
    pos += 5;
    int n = cur.number();
    cur.expect(')');
    return finish(path_graph(n));
  }
  if (starts("ball(")) {
    pos += 5;
    BallFamily fam;
    int rank = 0;
    if (s.compare(pos, 4, "dinf") == 0) {
      fam = BallFamily::InfiniteDihedral;
      pos += 4;
    } else if (s.compare(pos, 5, "free(") == 0) {
      fam = BallFamily::Free;
      pos += 5;
      rank = cur.number();
      cur.expect(')');
    } else if (s.compare(pos, 3, "fd(") == 0) {
      fam = BallFamily::FreeDihedral;
      pos += 3;
      rank = cur.number();
      cur.expect(')');
    } else if (s.compare(pos, 5, "psl2z") == 0) {
      fam = BallFamily::ModularPSL2Z;
      pos += 5;
    } else if (s.compare(pos, 1, "z") == 0) {
      fam = BallFamily::Integers;
      pos += 1;
    } else {
      throw ParseError("ball families: z, dinf, free(r), fd(r), psl2z");
    }
    cur.expect(',');
    int radius = cur.number();
    cur.expect(')');
    return finish(cayley_ball(fam, rank, radius));
  }
  if (starts("C")) {
    pos += 1;
    return finish(cycle_graph(cur.number()));
  }
  if (starts("K")) {
    pos += 1;
    return finish(complete_graph(cur.number()));
  }
  if (starts("P")) {
    pos += 1;
    return finish(point_graph(cur.number()));
  }
  throw ParseError("unrecognized graph expression: '" + spec + "'");
}

}  // namespace nat
