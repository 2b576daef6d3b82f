#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nat/config.hpp"
#include "nat/group.hpp"
#include "nat/metric.hpp"
#include "nat/perm.hpp"
#include "nat/rational.hpp"

namespace nat {

/// Simple or weighted undirected graph; no self-loops, no parallel edges,
/// weights strictly positive rationals.  Weight 0 internally means "no edge".
class WeightedGraph {
 public:
  explicit WeightedGraph(int n, std::vector<std::string> labels = {})
      : n_(n), w_(n, std::vector<Rat>(n, Rat(0))), labels_(std::move(labels)) {
    if (n < 1) throw InvalidInput("graph needs at least one vertex");
    if (labels_.empty()) {
      labels_.resize(n_);
      for (int i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
    }
    if (static_cast<int>(labels_.size()) != n_) throw InvalidInput("label count mismatch");
  }

  int vertices() const { return n_; }

  void add_edge(int u, int v, const Rat& weight = Rat(1)) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loops are not allowed");
    if (weight <= Rat(0)) throw InvalidInput("edge weight must be positive");
    if (w_[u][v] != Rat(0) && w_[u][v] != weight)
      throw InvalidInput("conflicting weight for a repeated edge");
    w_[u][v] = w_[v][u] = weight;
  }

  bool has_edge(int u, int v) const { return u != v && w_[u][v] != Rat(0); }
  const Rat& weight(int u, int v) const { return w_[u][v]; }

  /// Edges as (u, v, weight) with u < v, sorted.
  std::vector<std::tuple<int, int, Rat>> edges() const {
    std::vector<std::tuple<int, int, Rat>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (w_[u][v] != Rat(0)) out.emplace_back(u, v, w_[u][v]);
    return out;
  }

  int edge_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (w_[u][v] != Rat(0)) ++c;
    return c;
  }

  int degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
      if (has_edge(v, u)) ++d;
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (has_edge(v, u)) out.push_back(u);
    return out;
  }

  bool is_simple() const {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (w_[u][v] != Rat(0) && w_[u][v] != Rat(1)) return false;
    return true;
  }

  bool is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n_; ++u)
        if (has_edge(v, u) && !seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count == n_;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int v, std::string s) { labels_[v] = std::move(s); }

  /// Code matrix for the automorphism engine: -1 diagonal, 0 non-edge,
  /// 1 + weight-id for edges (ids sorted by weight value).
  std::vector<std::vector<int>> adjacency_code() const {
    std::map<Rat, int> id;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (w_[u][v] != Rat(0)) id.emplace(w_[u][v], 0);
    int next = 1;
    for (auto& [w, slot] : id) slot = next++;
    std::vector<std::vector<int>> code(n_, std::vector<int>(n_, -1));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v) code[u][v] = w_[u][v] == Rat(0) ? 0 : id.at(w_[u][v]);
    return code;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  int n_;
  std::vector<std::vector<Rat>> w_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

inline WeightedGraph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle graph needs n >= 3");
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline WeightedGraph complete_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// The edgeless graph on n vertices.
inline WeightedGraph point_graph(int n) { return WeightedGraph(n); }

inline WeightedGraph path_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline WeightedGraph complete_bipartite_graph(int a, int b) {
  WeightedGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

/// Circular ladder: two n-cycles joined by a perfect matching.
inline WeightedGraph prism_graph(int n) {
  if (n < 3) throw InvalidInput("prism needs n >= 3");
  WeightedGraph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

/// K_{2,2,2}, the 2-sphere on 6 vertices; antipodal pairs (i, i+3).
inline WeightedGraph octahedron_graph() {
  WeightedGraph g(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != i + 3) g.add_edge(i, j);
  return g;
}

inline WeightedGraph hypercube_graph(int k) {
  if (k < 0 || k > 16) throw InvalidInput("hypercube dimension out of range");
  int n = 1 << k;
  WeightedGraph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b)
      if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
  return g;
}

inline WeightedGraph icosahedron_graph() {
  // apex 0 on the top pentagon 1..5, apex 11 on the bottom pentagon 6..10,
  // antiprism edges u_i ~ l_i and u_i ~ l_{i+1}
  WeightedGraph g(12);
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, un = 1 + (i + 1) % 5;
    int l = 6 + i, ln = 6 + (i + 1) % 5;
    g.add_edge(0, u);
    g.add_edge(11, l);
    g.add_edge(u, un);
    g.add_edge(l, ln);
    g.add_edge(u, l);
    g.add_edge(u, ln);
  }
  return g;
}

/// Vertex truncation for graphs whose open neighborhoods induce cycles
/// (tetrahedron, icosahedron).  New vertices are darts (v,u); darts at the
/// same vertex are joined when their targets are adjacent; opposite darts of
/// an edge are joined.
inline WeightedGraph truncate_graph(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> darts;
  std::map<std::pair<int, int>, int> id;
  for (int v = 0; v < g.vertices(); ++v)
    for (int u : g.neighbors(v)) {
      id[{v, u}] = static_cast<int>(darts.size());
      darts.push_back({v, u});
    }
  WeightedGraph out(static_cast<int>(darts.size()));
  for (std::size_t i = 0; i < darts.size(); ++i)
    out.set_label(static_cast<int>(i),
                  std::to_string(darts[i].first) + ">" + std::to_string(darts[i].second));
  for (const auto& [d, i] : id) {
    auto [v, u] = d;
    if (v < u) out.add_edge(i, id.at({u, v}));
    for (int w : g.neighbors(v))
      if (w > u && g.has_edge(u, w)) out.add_edge(i, id.at({v, w}));
  }
  return out;
}

/// 12 vertices, 18 edges, 3-regular; |Aut| = 12.
inline WeightedGraph truncated_tetrahedron_graph() { return truncate_graph(complete_graph(4)); }

/// 60 vertices, 90 edges, 3-regular; |Aut| = 120.
inline WeightedGraph truncated_icosahedron_graph() { return truncate_graph(icosahedron_graph()); }

// ---------------------------------------------------------------------------
// Metric, complement, join, union
// ---------------------------------------------------------------------------

/// All-pairs shortest paths, exact over the rationals.
inline MetricSpace geodesic_metric(const WeightedGraph& g) {
  const int n = g.vertices();
  std::vector<std::vector<std::optional<Rat>>> d(n, std::vector<std::optional<Rat>>(n));
  for (int i = 0; i < n; ++i) d[i][i] = Rat(0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) d[u][v] = g.weight(u, v);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Rat via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!d[i][j])
        throw InvalidInput("geodesic metric undefined: graph is disconnected");
      m[i][j] = *d[i][j];
    }
  return MetricSpace(std::move(m), g.labels());
}

/// Complement of a simple graph (undefined for weighted input: a new edge
/// would have no weight to inherit).
inline WeightedGraph complement(const WeightedGraph& g) {
  if (!g.is_simple()) throw InvalidInput("complement is defined for simple graphs only");
  WeightedGraph out(g.vertices(), g.labels());
  for (int u = 0; u < g.vertices(); ++u)
    for (int v = u + 1; v < g.vertices(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

/// Join: disjoint union plus every cross edge.
inline WeightedGraph join(const WeightedGraph& a, const WeightedGraph& b) {
  if (!a.is_simple() || !b.is_simple()) throw InvalidInput("join is defined for simple graphs only");
  WeightedGraph out(a.vertices() + b.vertices());
  for (auto [u, v, w] : a.edges()) out.add_edge(u, v);
  for (auto [u, v, w] : b.edges()) out.add_edge(a.vertices() + u, a.vertices() + v);
  for (int u = 0; u < a.vertices(); ++u)
    for (int v = 0; v < b.vertices(); ++v) out.add_edge(u, a.vertices() + v);
  return out;
}

/// Disjoint union.  The result is disconnected, hence non-metrizable here:
/// geodesic_metric on it reports an error rather than modeling infinite
/// distances.
inline WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  WeightedGraph out(a.vertices() + b.vertices());
  for (auto [u, v, w] : a.edges()) out.add_edge(u, v, w);
  for (auto [u, v, w] : b.edges()) out.add_edge(a.vertices() + u, a.vertices() + v, w);
  return out;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

enum class GraphProduct { Shannon, Tensor, Cartesian, Lexicographic };

/// Vertex set is the Cartesian product, pair (a,b) at index a*|H| + b.
/// For simple inputs the result is simple; for weighted inputs an edge's
/// weight is the sum of the coordinate displacements (a held coordinate
/// contributes 0; a lexicographic cross edge charges only the first factor).
inline WeightedGraph product(const WeightedGraph& G, const WeightedGraph& H, GraphProduct kind) {
  const int ng = G.vertices(), nh = H.vertices();
  const bool simple = G.is_simple() && H.is_simple();
  WeightedGraph out(ng * nh);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) out.set_label(a * nh + b, G.labels()[a] + "|" + H.labels()[b]);
  auto wG = [&](int a, int c) { return simple ? Rat(1) : G.weight(a, c); };
  auto wH = [&](int b, int d) { return simple ? Rat(1) : H.weight(b, d); };
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      for (int c = 0; c < ng; ++c)
        for (int d = 0; d < nh; ++d) {
          int i = a * nh + b, j = c * nh + d;
          if (i >= j) continue;
          bool eg = G.has_edge(a, c), eh = H.has_edge(b, d);
          bool connect = false;
          Rat w(0);
          switch (kind) {
            case GraphProduct::Cartesian:
              if (a == c && eh) connect = true, w = wH(b, d);
              if (b == d && eg) connect = true, w = wG(a, c);
              break;
            case GraphProduct::Tensor:
              if (eg && eh) connect = true, w = simple ? Rat(1) : wG(a, c) + wH(b, d);
              break;
            case GraphProduct::Shannon:
              if (a == c && eh) connect = true, w = wH(b, d);
              else if (b == d && eg) connect = true, w = wG(a, c);
              else if (eg && eh) connect = true, w = simple ? Rat(1) : wG(a, c) + wH(b, d);
              break;
            case GraphProduct::Lexicographic:
              if (eg) connect = true, w = wG(a, c);
              else if (a == c && eh) connect = true, w = wH(b, d);
              break;
          }
          if (connect) out.add_edge(i, j, w);
        }
  return out;
}

// ---------------------------------------------------------------------------
// Cayley graphs and the zig-zag product
// ---------------------------------------------------------------------------

/// Cayley graph of G on the symmetrized set S (identity excluded); S must
/// generate G.  Optional weights are per generator and must agree on {s, s^-1}.
inline WeightedGraph cayley_graph(const GroupTable& G, std::vector<int> S,
                                  const std::map<int, Rat>& weights = {}) {
  std::set<int> gens;
  for (int s : S) {
    if (s < 0 || s >= G.order()) throw InvalidInput("generator index out of range");
    if (s == G.identity()) continue;
    gens.insert(s);
    gens.insert(G.inv(s));
  }
  if (gens.empty()) throw InvalidInput("empty generator set");
  std::map<int, Rat> wmap;
  for (int s : gens) {
    Rat w(1);
    auto it = weights.find(s);
    auto it2 = weights.find(G.inv(s));
    if (it != weights.end() && it2 != weights.end() && it->second != it2->second)
      throw InvalidInput("generator weights differ on an inverse pair");
    if (it != weights.end())
      w = it->second;
    else if (it2 != weights.end())
      w = it2->second;
    wmap[s] = w;
  }
  // generation check
  {
    std::vector<char> seen(G.order(), 0);
    std::vector<int> stack{G.identity()};
    seen[G.identity()] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s : gens) {
        int y = G.mul(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != G.order()) throw InvalidInput("generator set does not generate the group");
  }
  WeightedGraph out(G.order(), G.labels());
  for (int x = 0; x < G.order(); ++x)
    for (int s : gens) out.add_edge(x, G.mul(x, s), wmap.at(s));
  return out;
}

/// Which generator words define the zig-zag product's Cayley graph.
///   TS:           { t s       : t in T, s in S u {1} }
///   TST:          { t1 s t2   : t1, t2 in T, s in S u {1} }
///   Literal:      { t1 s t2   : t1 in T, s in S u {1}, t2 in T u {1} }
/// All sets are symmetrized and the identity removed before use.
enum class ZigzagPolicy { TS, TST, Literal };

/// Cayley graph of the semidirect product (base K acting on fiber N) on the
/// generator words of the chosen policy.  S lists N-generators, T lists
/// K-generators.
inline WeightedGraph zigzag_cayley(const GroupTable& N, const std::vector<int>& S,
                                   const GroupTable& K, const std::vector<int>& T,
                                   const std::vector<Permutation>& action, ZigzagPolicy policy) {
  GroupTable P = semidirect_product(N, K, action);
  const int nn = N.order();
  auto embedN = [&](int s) { return K.identity() * nn + s; };
  auto embedK = [&](int t) { return t * nn + N.identity(); };
  // generator lists are symmetrized inside their own groups first, as for
  // plain Cayley graphs
  std::set<int> s_sym, t_sym;
  for (int s : S) {
    s_sym.insert(s);
    s_sym.insert(N.inv(s));
  }
  for (int t : T) {
    t_sym.insert(t);
    t_sym.insert(K.inv(t));
  }
  std::vector<int> s_ext(s_sym.begin(), s_sym.end());
  s_ext.push_back(N.identity());
  std::set<int> words;
  switch (policy) {
    case ZigzagPolicy::TS:
      for (int t : t_sym)
        for (int s : s_ext) words.insert(P.mul(embedK(t), embedN(s)));
      break;
    case ZigzagPolicy::TST:
      for (int t1 : t_sym)
        for (int s : s_ext)
          for (int t2 : t_sym) words.insert(P.mul(P.mul(embedK(t1), embedN(s)), embedK(t2)));
      break;
    case ZigzagPolicy::Literal: {
      std::vector<int> t_ext(t_sym.begin(), t_sym.end());
      t_ext.push_back(K.identity());
      for (int t1 : t_sym)
        for (int s : s_ext)
          for (int t2 : t_ext) words.insert(P.mul(P.mul(embedK(t1), embedN(s)), embedK(t2)));
      break;
    }
  }
  words.erase(P.identity());
  if (words.empty()) throw InvalidInput("zig-zag generator set is empty");
  return cayley_graph(P, std::vector<int>(words.begin(), words.end()));
}

// ---------------------------------------------------------------------------
// Cliques, connection graphs, Barycentric refinement
// ---------------------------------------------------------------------------

/// All nonempty cliques (as sorted vertex tuples) with at most max_dim + 1
/// vertices; max_dim < 0 means no dimension cap.  Output sorted by size then
/// lexicographically; fails loudly beyond the clique bound.
inline std::vector<std::vector<int>> all_cliques(const WeightedGraph& g, int max_dim = -1) {
  if (!g.is_simple()) throw InvalidInput("clique enumeration needs a simple graph");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    for (int v = from; v < g.vertices(); ++v) {
      bool ok = true;
      for (int u : cur)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      out.push_back(cur);
      if (static_cast<std::int64_t>(out.size()) > limits().clique_bound)
        throw BoundExceeded("clique count exceeds the configured bound");
      if (max_dim < 0 || static_cast<int>(cur.size()) <= max_dim) self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace detail {
inline std::string clique_label(const std::vector<int>& c, const WeightedGraph& g) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "-" : "") + g.labels()[c[i]];
  return s;
}
}  // namespace detail

/// Vertices are the cliques of g; edges join cliques with nonempty
/// intersection.  max_dim caps the clique dimension (max_dim = 1 keeps
/// vertices and edges only, the 1-skeleton convention).
inline WeightedGraph connection_graph(const WeightedGraph& g, int max_dim = -1) {
  auto cliques = all_cliques(g, max_dim);
  WeightedGraph out(static_cast<int>(cliques.size()));
  for (std::size_t i = 0; i < cliques.size(); ++i)
    out.set_label(static_cast<int>(i), detail::clique_label(cliques[i], g));
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      bool meet = false;
      for (int v : cliques[i]) {
        if (std::binary_search(cliques[j].begin(), cliques[j].end(), v)) {
          meet = true;
          break;
        }
      }
      if (meet) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

/// Vertices are the cliques of g; edges join cliques where one properly
/// contains the other.
inline WeightedGraph barycentric_refinement(const WeightedGraph& g, int max_dim = -1) {
  auto cliques = all_cliques(g, max_dim);
  WeightedGraph out(static_cast<int>(cliques.size()));
  for (std::size_t i = 0; i < cliques.size(); ++i)
    out.set_label(static_cast<int>(i), detail::clique_label(cliques[i], g));
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      const auto &small = cliques[i], &big = cliques[j];
      if (small.size() == big.size()) continue;
      bool contained = std::includes(big.begin(), big.end(), small.begin(), small.end());
      if (contained) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms and naturalness
// ---------------------------------------------------------------------------

/// Weight-preserving vertex bijections.  For connected simple graphs the
/// group is cross-checked against the isometry group of the geodesic metric;
/// the two computations must agree.
inline PermGroup graph_automorphisms(const WeightedGraph& g) {
  PermGroup direct = automorphisms_of_code_matrix(g.adjacency_code());
  if (g.is_simple() && g.is_connected()) {
    PermGroup metric = isometry_group(geodesic_metric(g));
    if (!(direct == metric))
      throw Error("internal error: graph automorphisms disagree with geodesic isometries");
  }
  return direct;
}

inline NaturalnessVerdict is_natural_graph(const WeightedGraph& g, CompatibilityMode mode) {
  return compatible_structures(geodesic_metric(g), mode);
}

/// Explicit isomorphism between two graphs (weights must match exactly),
/// via shared weight ids, color refinement and backtracking.
inline std::optional<Permutation> graph_isomorphism(const WeightedGraph& a,
                                                    const WeightedGraph& b) {
  if (a.vertices() != b.vertices() || a.edge_count() != b.edge_count()) return std::nullopt;
  const int n = a.vertices();
  std::map<Rat, int> id;
  for (const auto& g : {a, b})
    for (auto [u, v, w] : g.edges()) id.emplace(w, 0);
  int next = 1;
  for (auto& [w, slot] : id) slot = next++;
  auto code_of = [&](const WeightedGraph& g) {
    std::vector<std::vector<int>> code(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) code[u][v] = g.has_edge(u, v) ? id.at(g.weight(u, v)) : 0;
    return code;
  };
  auto ca = code_of(a), cb = code_of(b);

  // parallel color refinement; signatures must stay aligned across the graphs
  std::vector<int> cola(n, 0), colb(n, 0);
  for (;;) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
    auto sig = [&](const std::vector<std::vector<int>>& code, const std::vector<int>& col, int i) {
      std::vector<std::pair<int, int>> s;
      for (int j = 0; j < n; ++j)
        if (j != i) s.emplace_back(col[j], code[i][j]);
      std::sort(s.begin(), s.end());
      return std::make_pair(col[i], std::move(s));
    };
    std::vector<decltype(sig(ca, cola, 0))> siga(n), sigb(n);
    for (int i = 0; i < n; ++i) siga[i] = sig(ca, cola, i), sigb[i] = sig(cb, colb, i);
    for (int i = 0; i < n; ++i) ids.emplace(siga[i], 0), ids.emplace(sigb[i], 0);
    int next_id = 0;
    for (auto& [k, v] : ids) v = next_id++;
    std::vector<int> na(n), nb(n);
    for (int i = 0; i < n; ++i) na[i] = ids.at(siga[i]), nb[i] = ids.at(sigb[i]);
    // histogram must match or there is no isomorphism
    auto ha = na, hb = nb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
    bool stable = na == cola && nb == colb;
    cola = std::move(na);
    colb = std::move(nb);
    if (stable) break;
  }

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || colb[w] != cola[v]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (ca[v][u] != cb[w][img[u]]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      img[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Permutation(img);
}

// ---------------------------------------------------------------------------
// Cayley balls of infinite families
// ---------------------------------------------------------------------------

enum class BallFamily { Integers, InfiniteDihedral, Free, FreeDihedral, ModularPSL2Z };

/// Ball of word-length radius k around the identity, built by normal-form
/// enumeration.  rank is used by Free / FreeDihedral.  weights, when given,
/// assign one length per generator name ("a", "b", "x1", "x", "y", ...);
/// inverse pairs share the weight.
inline WeightedGraph cayley_ball(BallFamily family, int rank, int radius,
                                 const std::map<std::string, Rat>& weights = {}) {
  if (radius < 0) throw InvalidInput("radius must be non-negative");
  struct Gen {
    std::string name;  // weight key
    int letter;        // internal letter id
  };
  // words are sequences of letter ids with family-specific rewriting
  std::vector<Gen> gens;
  // letter alphabet per family:
  //   Integers:        0 = a, 1 = a^{-1}
  //   InfiniteDihedral 0 = a, 1 = b (involutions)
  //   Free(r):         2i = x_{i+1}, 2i+1 = x_{i+1}^{-1}
  //   FreeDihedral(r): i = a_{i+1} (involutions)
  //   ModularPSL2Z:    0 = x (involution), 1 = y, 2 = y^2 = y^{-1}
  switch (family) {
    case BallFamily::Integers:
      gens = {{"a", 0}, {"a", 1}};
      break;
    case BallFamily::InfiniteDihedral:
      gens = {{"a", 0}, {"b", 1}};
      break;
    case BallFamily::Free:
      if (rank < 1 || rank > 26) throw InvalidInput("free group rank must be in 1..26");
      for (int i = 0; i < rank; ++i) {
        gens.push_back({"x" + std::to_string(i + 1), 2 * i});
        gens.push_back({"x" + std::to_string(i + 1), 2 * i + 1});
      }
      break;
    case BallFamily::FreeDihedral:
      if (rank < 1 || rank > 26) throw InvalidInput("free dihedral rank must be in 1..26");
      for (int i = 0; i < rank; ++i) gens.push_back({"a" + std::to_string(i + 1), i});
      break;
    case BallFamily::ModularPSL2Z:
      gens = {{"x", 0}, {"y", 1}, {"y", 2}};
      break;
  }

  auto apply = [&](std::vector<int> w, int letter) -> std::vector<int> {
    switch (family) {
      case BallFamily::Integers:
        // a a^{-1} and a^{-1} a cancel
        if (!w.empty() && w.back() != letter) w.pop_back();
        else w.push_back(letter);
        return w;
      case BallFamily::InfiniteDihedral:
      case BallFamily::FreeDihedral:
        if (!w.empty() && w.back() == letter) w.pop_back();
        else w.push_back(letter);
        return w;
      case BallFamily::Free: {
        int inv = letter ^ 1;
        if (!w.empty() && w.back() == inv) w.pop_back();
        else w.push_back(letter);
        return w;
      }
      case BallFamily::ModularPSL2Z: {
        if (letter == 0) {  // x
          if (!w.empty() && w.back() == 0) w.pop_back();
          else w.push_back(0);
        } else if (letter == 1) {  // y: y*y = y^2, y^2*y = 1
          if (!w.empty() && w.back() == 1) w.back() = 2;
          else if (!w.empty() && w.back() == 2) w.pop_back();
          else w.push_back(1);
        } else {  // y^{-1}
          if (!w.empty() && w.back() == 2) w.back() = 1;
          else if (!w.empty() && w.back() == 1) w.pop_back();
          else w.push_back(2);
        }
        return w;
      }
    }
    return w;
  };

  auto word_name = [&](const std::vector<int>& w) -> std::string {
    if (w.empty()) return "e";
    std::string s;
    for (int letter : w) {
      switch (family) {
        case BallFamily::Integers:
          s += letter == 0 ? "a" : "A";
          break;
        case BallFamily::InfiniteDihedral:
          s += letter == 0 ? "a" : "b";
          break;
        case BallFamily::Free:
          s += std::string(1, static_cast<char>((letter % 2 ? 'A' : 'a') + letter / 2));
          break;
        case BallFamily::FreeDihedral:
          s += std::string(1, static_cast<char>('a' + letter));
          break;
        case BallFamily::ModularPSL2Z:
          s += letter == 0 ? "x" : (letter == 1 ? "y" : "Y");
          break;
      }
    }
    return s;
  };

  // BFS by word metric
  std::map<std::vector<int>, int> dist;
  std::vector<std::vector<int>> order;
  dist[{}] = 0;
  order.push_back({});
  std::size_t head = 0;
  while (head < order.size()) {
    auto w = order[head++];
    int dw = dist.at(w);
    if (dw == radius) continue;
    for (const auto& g : gens) {
      auto v = apply(w, g.letter);
      if (dist.emplace(v, dw + 1).second) {
        order.push_back(v);
        if (static_cast<std::int64_t>(order.size()) > limits().clique_bound)
          throw BoundExceeded("Cayley ball exceeds the vertex bound");
      }
    }
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  WeightedGraph out(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) out.set_label(static_cast<int>(i), word_name(order[i]));
  for (const auto& w : order) {
    for (const auto& g : gens) {
      auto v = apply(w, g.letter);
      auto it = index.find(v);
      if (it == index.end() || v == w) continue;
      Rat wt(1);
      if (auto itw = weights.find(g.name); itw != weights.end()) wt = itw->second;
      int iu = index.at(w), iv = it->second;
      if (iu < iv) out.add_edge(iu, iv, wt);
    }
  }
  return out;
}

}  // namespace nat
