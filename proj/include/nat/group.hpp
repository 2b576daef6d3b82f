#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nat/config.hpp"
#include "nat/perm.hpp"
#include "nat/rational.hpp"

namespace nat {

/// Explicit finite group: multiplication table, identity index, labels.
///
/// The table is fully validated on construction: identity, Latin square,
/// two-sided inverses, associativity (all triples up to order 64, a
/// deterministic sample above).
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> labels = {})
      : n_(static_cast<int>(table.size())), t_(std::move(table)), labels_(std::move(labels)) {
    if (n_ == 0) throw InvalidInput("empty group table");
    if (n_ > limits().table_order_bound)
      throw BoundExceeded("group order " + std::to_string(n_) + " exceeds the table bound of " +
                          std::to_string(limits().table_order_bound));
    validate();
    if (labels_.empty()) {
      labels_.resize(n_);
      for (int i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
    }
    if (static_cast<int>(labels_.size()) != n_) throw InvalidInput("label count mismatch");
  }

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int i, int j) const { return t_[i][j]; }
  int inv(int i) const { return inv_[i]; }
  const std::vector<std::vector<int>>& table() const { return t_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  int power(int x, long long k) const {
    if (k < 0) return power(inv(x), -k);
    int acc = e_;
    while (k--) acc = mul(acc, x);
    return acc;
  }

  /// Least k >= 1 with x^k = e.
  int element_order(int x) const {
    int acc = x, k = 1;
    while (acc != e_) {
      acc = mul(acc, x);
      ++k;
    }
    return k;
  }

  /// Sorted (order, count) pairs over all elements.
  std::vector<std::pair<int, int>> order_census() const {
    std::map<int, int> cnt;
    for (int i = 0; i < n_; ++i) ++cnt[element_order(i)];
    return {cnt.begin(), cnt.end()};
  }

  bool is_abelian() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (t_[i][j] != t_[j][i]) return false;
    return true;
  }

  std::vector<int> center() const {
    std::vector<int> z;
    for (int i = 0; i < n_; ++i) {
      bool central = true;
      for (int j = 0; j < n_ && central; ++j) central = t_[i][j] == t_[j][i];
      if (central) z.push_back(i);
    }
    return z;
  }

  /// Partition by conjugacy g ~ h g h^{-1}; classes ordered by least member.
  std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<int> cls(n_, -1);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n_; ++g) {
      if (cls[g] >= 0) continue;
      int id = static_cast<int>(classes.size());
      classes.push_back({});
      std::vector<int> stack{g};
      cls[g] = id;
      classes[id].push_back(g);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h = 0; h < n_; ++h) {
          int y = mul(mul(h, x), inv(h));
          if (cls[y] < 0) {
            cls[y] = id;
            classes[id].push_back(y);
            stack.push_back(y);
          }
        }
      }
      std::sort(classes[id].begin(), classes[id].end());
    }
    return classes;
  }

  /// Conjugacy classes merged with the classes of their inverses.
  std::vector<std::vector<int>> inverse_closed_classes() const {
    auto classes = conjugacy_classes();
    std::vector<int> cls(n_);
    for (int id = 0; id < static_cast<int>(classes.size()); ++id)
      for (int g : classes[id]) cls[g] = id;
    // union-find over class ids
    std::vector<int> parent(classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int g = 0; g < n_; ++g) {
      int a = find(cls[g]), b = find(cls[inv(g)]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> merged;
    for (int g = 0; g < n_; ++g) merged[find(cls[g])].push_back(g);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : merged) {
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
  }

  /// y -> x*y as a permutation of element indices.
  Permutation left_translation(int x) const { return Permutation(t_[x]); }

  /// y -> y*x as a permutation of element indices.
  Permutation right_translation(int x) const {
    std::vector<int> im(n_);
    for (int y = 0; y < n_; ++y) im[y] = t_[y][x];
    return Permutation(std::move(im));
  }

  /// x -> x^{-1} as a permutation of element indices.
  Permutation inversion_map() const {
    std::vector<int> im(inv_);
    return Permutation(std::move(im));
  }

  /// The set of left translations acting on element indices.
  PermGroup left_regular_representation() const {
    std::vector<Permutation> rows;
    rows.reserve(n_);
    for (int x = 0; x < n_; ++x) rows.push_back(left_translation(x));
    auto G = PermGroup::from_elements(n_, std::move(rows));
    return PermGroup::from_elements(n_, G.elements(), G.small_generating_set());
  }

 private:
  void validate() {
    for (const auto& row : t_) {
      if (static_cast<int>(row.size()) != n_) throw InvalidInput("table is not square");
      for (int v : row)
        if (v < 0 || v >= n_) throw InvalidInput("table entry out of range");
    }
    e_ = -1;
    for (int i = 0; i < n_; ++i) {
      bool ident = true;
      for (int j = 0; j < n_ && ident; ++j) ident = t_[i][j] == j && t_[j][i] == j;
      if (ident) {
        if (e_ >= 0) throw InvalidInput("two identity elements");
        e_ = i;
      }
    }
    if (e_ < 0) throw InvalidInput("no identity element");
    for (int i = 0; i < n_; ++i) {
      std::vector<char> row(n_, 0), col(n_, 0);
      for (int j = 0; j < n_; ++j) {
        if (row[t_[i][j]]++) throw InvalidInput("row is not a permutation");
        if (col[t_[j][i]]++) throw InvalidInput("column is not a permutation");
      }
    }
    inv_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (t_[i][j] == e_ && t_[j][i] == e_) {
          inv_[i] = j;
          break;
        }
      }
      if (inv_[i] < 0) throw InvalidInput("element without a two-sided inverse");
    }
    if (n_ <= 64) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c)
            if (t_[t_[a][b]][c] != t_[a][t_[b][c]])
              throw InvalidInput("table is not associative");
    } else {
      std::uint64_t s = 0x9e3779b97f4a7c15ull;
      auto rnd = [&]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
      };
      for (int k = 0; k < 200'000; ++k) {
        int a = static_cast<int>(rnd() % n_), b = static_cast<int>(rnd() % n_),
            c = static_cast<int>(rnd() % n_);
        if (t_[t_[a][b]][c] != t_[a][t_[b][c]])
          throw InvalidInput("table is not associative (sampled)");
      }
    }
  }

  int n_ = 0;
  std::vector<std::vector<int>> t_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  int e_ = 0;
};

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

inline GroupTable trivial_group() { return GroupTable({{0}}, {"e"}); }

inline GroupTable cyclic_group(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int i = 0; i < n; ++i) {
    lab[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return GroupTable(std::move(t), std::move(lab));
}

/// Order 2n; index i + n*j encodes r^i s^j.
inline GroupTable dihedral_group(int n) {
  if (n < 1) throw InvalidInput("dihedral group needs n >= 1");
  const int m = 2 * n;
  auto enc = [&](int i, int j) { return ((i % n + n) % n) + n * j; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> lab(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string s = j ? "s" : "";
      if (i == 0 && j == 0)
        lab[enc(i, j)] = "e";
      else if (i == 0)
        lab[enc(i, j)] = "s";
      else
        lab[enc(i, j)] = "r" + std::to_string(i) + s;
    }
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? i1 - i2 : i1 + i2;  // s r^k = r^{-k} s
          t[enc(i1, j1)][enc(i2, j2)] = enc(i, (j1 + j2) % 2);
        }
  return GroupTable(std::move(t), std::move(lab));
}

/// Order 4n from <a,b | a^{2n}=1, b^2=a^n, b^{-1}ab=a^{-1}>; index i + 2n*j
/// encodes a^i b^j.  dicyclic_group(2) is the quaternion group Q8.
inline GroupTable dicyclic_group(int n) {
  if (n < 1) throw InvalidInput("dicyclic group needs n >= 1");
  const int two_n = 2 * n, m = 4 * n;
  auto enc = [&](int i, int j) { return ((i % two_n + two_n) % two_n) + two_n * j; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i1 = 0; i1 < two_n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = (j1 ? i1 - i2 : i1 + i2) + (j1 && j2 ? n : 0);  // b a^k = a^{-k} b, b^2 = a^n
          t[enc(i1, j1)][enc(i2, j2)] = enc(i, (j1 + j2) % 2);
        }
  std::vector<std::string> lab(m);
  if (n == 2) {
    lab = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  } else {
    for (int i = 0; i < two_n; ++i)
      for (int j = 0; j < 2; ++j) {
        std::string s;
        if (i == 0 && j == 0)
          s = "e";
        else {
          if (i > 0) s = "a" + std::to_string(i);
          if (j) s += "b";
        }
        lab[enc(i, j)] = s;
      }
  }
  return GroupTable(std::move(t), std::move(lab));
}

inline GroupTable quaternion_group() { return dicyclic_group(2); }

namespace detail {
inline std::vector<Permutation> all_perms(int m, bool even_only) {
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation p(im);
    if (!even_only || sign(p) == 1) out.push_back(p);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

inline GroupTable table_from_perms(const std::vector<Permutation>& elems) {
  std::map<Permutation, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::string> lab(m);
  for (int i = 0; i < m; ++i) lab[i] = cycle_string(elems[i]);
  return GroupTable(std::move(t), std::move(lab));
}
}  // namespace detail

inline GroupTable symmetric_group(int m) {
  if (m < 1) throw InvalidInput("symmetric group needs m >= 1");
  return detail::table_from_perms(detail::all_perms(m, false));
}

inline GroupTable alternating_group(int m) {
  if (m < 1) throw InvalidInput("alternating group needs m >= 1");
  return detail::table_from_perms(detail::all_perms(m, true));
}

/// Z_p^k with componentwise addition; index = sum of digit_i * p^i.
inline GroupTable elementary_abelian_group(int p, int k) {
  if (p < 2 || k < 1) throw InvalidInput("elementary abelian group needs p >= 2, k >= 1");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInput("elementary abelian base must be prime");
  long long mll = 1;
  for (int i = 0; i < k; ++i) mll *= p;
  if (mll > limits().table_order_bound)
    throw BoundExceeded("elementary abelian group too large");
  const int m = static_cast<int>(mll);
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> lab(m);
  auto digits = [&](int v) {
    std::string s(k, '0');
    for (int i = 0; i < k; ++i, v /= p) s[i] = static_cast<char>('0' + v % p);
    return s;
  };
  for (int a = 0; a < m; ++a) {
    lab[a] = digits(a);
    for (int b = 0; b < m; ++b) {
      int sum = 0, pw = 1, x = a, y = b;
      for (int i = 0; i < k; ++i, x /= p, y /= p, pw *= p) sum += ((x + y) % p) * pw;
      t[a][b] = sum;
    }
  }
  return GroupTable(std::move(t), std::move(lab));
}

/// Componentwise product on pairs (a,b), index a*|B| + b.
inline GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  long long mll = static_cast<long long>(A.order()) * B.order();
  if (mll > limits().table_order_bound) throw BoundExceeded("direct product too large");
  const int m = static_cast<int>(mll), nb = B.order();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> lab(m);
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < nb; ++b) lab[a * nb + b] = A.label(a) + "|" + B.label(b);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = A.mul(i / nb, j / nb) * nb + B.mul(i % nb, j % nb);
  return GroupTable(std::move(t), std::move(lab));
}

/// True iff p is a table-preserving bijection of G (an automorphism).
inline bool is_automorphism(const GroupTable& G, const Permutation& p) {
  if (p.degree() != G.order()) return false;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (p(G.mul(a, b)) != G.mul(p(a), p(b))) return false;
  return true;
}

/// Semidirect product with base K acting on fiber N:
/// (k1,h1)*(k2,h2) = (k1 k2, h1 * action[k1](h2)), index k*|N| + h.
/// `action` gives one automorphism of N per K element and must be a
/// homomorphism K -> Aut(N); both are verified.
inline GroupTable semidirect_product(const GroupTable& N, const GroupTable& K,
                                     const std::vector<Permutation>& action) {
  if (static_cast<int>(action.size()) != K.order())
    throw InvalidInput("semidirect: need one automorphism per base element");
  for (const auto& a : action)
    if (!is_automorphism(N, a)) throw InvalidInput("semidirect: action image is not an automorphism");
  for (int k1 = 0; k1 < K.order(); ++k1)
    for (int k2 = 0; k2 < K.order(); ++k2)
      if (action[K.mul(k1, k2)] != compose(action[k2], action[k1]))
        throw InvalidInput("semidirect: action is not a homomorphism");
  long long mll = static_cast<long long>(N.order()) * K.order();
  if (mll > limits().table_order_bound) throw BoundExceeded("semidirect product too large");
  const int m = static_cast<int>(mll), nn = N.order();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> lab(m);
  for (int k = 0; k < K.order(); ++k)
    for (int h = 0; h < nn; ++h) lab[k * nn + h] = K.label(k) + "|" + N.label(h);
  for (int i = 0; i < m; ++i) {
    int k1 = i / nn, h1 = i % nn;
    for (int j = 0; j < m; ++j) {
      int k2 = j / nn, h2 = j % nn;
      t[i][j] = K.mul(k1, k2) * nn + N.mul(h1, action[k1](h2));
    }
  }
  return GroupTable(std::move(t), std::move(lab));
}

/// Z_2^n ⋊ Z_n, the lamplighter over the cyclic world of size n; the base
/// cyclically shifts the lamp coordinates.  Order n * 2^n.
inline GroupTable lamplighter_group(int n) {
  if (n < 1) throw InvalidInput("lamplighter needs n >= 1");
  if (n == 1) return cyclic_group(2);
  GroupTable N = elementary_abelian_group(2, n);
  GroupTable K = cyclic_group(n);
  std::vector<Permutation> action;
  for (int k = 0; k < n; ++k) {
    std::vector<int> im(N.order());
    for (int v = 0; v < N.order(); ++v) {
      int w = 0;
      for (int i = 0; i < n; ++i)
        if (v >> ((i - k % n + n) % n) & 1) w |= 1 << i;
      im[v] = w;
    }
    action.push_back(Permutation(std::move(im)));
  }
  return semidirect_product(N, K, action);
}

/// The permutation group, seen as an abstract group through its own
/// multiplication; labels are cycle strings.
inline GroupTable group_from_permutations(const PermGroup& G) {
  if (G.order() > limits().table_order_bound)
    throw BoundExceeded("permutation group too large for an explicit table");
  return detail::table_from_perms(G.elements());
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphism testing
// ---------------------------------------------------------------------------

namespace detail {

/// Per-element invariants used to filter isomorphism candidates.
inline std::vector<std::tuple<int, int, int>> element_invariants(const GroupTable& G) {
  auto classes = G.conjugacy_classes();
  std::vector<int> class_size(G.order());
  for (const auto& c : classes)
    for (int g : c) class_size[g] = static_cast<int>(c.size());
  std::vector<std::tuple<int, int, int>> inv(G.order());
  for (int g = 0; g < G.order(); ++g)
    inv[g] = {G.element_order(g), class_size[g], G.element_order(G.mul(g, g))};
  return inv;
}

/// Greedy generating sequence, preferring high element order; deterministic.
inline std::vector<int> generating_sequence(const GroupTable& G) {
  std::vector<int> order_of(G.order());
  for (int g = 0; g < G.order(); ++g) order_of[g] = G.element_order(g);
  std::vector<int> gens;
  std::vector<char> in_span(G.order(), 0);
  in_span[G.identity()] = 1;
  int span_size = 1;
  while (span_size < G.order()) {
    int best = -1;
    for (int g = 0; g < G.order(); ++g)
      if (!in_span[g] && (best < 0 || order_of[g] > order_of[best])) best = g;
    gens.push_back(best);
    // close the span under multiplication with the new generator set
    std::vector<int> members;
    for (int g = 0; g < G.order(); ++g)
      if (in_span[g]) members.push_back(g);
    std::vector<int> fresh{best};
    in_span[best] = 1;
    members.push_back(best);
    ++span_size;
    while (!fresh.empty()) {
      int a = fresh.back();
      fresh.pop_back();
      std::vector<int> snapshot = members;
      for (int b : snapshot) {
        for (int c : {G.mul(a, b), G.mul(b, a)}) {
          if (!in_span[c]) {
            in_span[c] = 1;
            members.push_back(c);
            fresh.push_back(c);
            ++span_size;
          }
        }
      }
    }
  }
  return gens;
}

/// Does the partial assignment extend to an injective homomorphism on the
/// subgroup generated so far?
inline bool partial_extends(const GroupTable& A, const GroupTable& B, const std::vector<int>& gens,
                            const std::vector<int>& images) {
  std::map<int, int> phi;
  phi[A.identity()] = B.identity();
  std::set<int> image_set{B.identity()};
  std::vector<int> queue{A.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = A.mul(x, gens[i]);
      int im = B.mul(phi[x], images[i]);
      auto it = phi.find(y);
      if (it == phi.end()) {
        if (!image_set.insert(im).second) return false;
        phi[y] = im;
        queue.push_back(y);
      } else if (it->second != im) {
        return false;
      }
    }
  }
  for (const auto& [x, im] : phi)
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (phi.at(A.mul(x, gens[i])) != B.mul(im, images[i])) return false;
  return true;
}

/// Try to extend gen -> image to a full injective homomorphism A -> B.
/// Returns the full image map or nullopt.  A's elements are swept in a
/// Cayley-graph BFS from the identity, so consistency on every (x, x*gen)
/// edge makes the extension a homomorphism on all of A.
inline std::optional<std::vector<int>> extend_morphism(const GroupTable& A, const GroupTable& B,
                                                       const std::vector<int>& gens,
                                                       const std::vector<int>& images) {
  std::vector<int> phi(A.order(), -1);
  std::vector<char> hit(B.order(), 0);
  phi[A.identity()] = B.identity();
  hit[B.identity()] = 1;
  std::vector<int> queue{A.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = A.mul(x, gens[i]);
      int im = B.mul(phi[x], images[i]);
      if (phi[y] < 0) {
        if (hit[im]) return std::nullopt;  // not injective
        phi[y] = im;
        hit[im] = 1;
        queue.push_back(y);
      } else if (phi[y] != im) {
        return std::nullopt;  // inconsistent
      }
    }
  }
  for (int x : phi)
    if (x < 0) return std::nullopt;  // gens did not generate (cannot happen for full gen set)
  // full check on every Cayley edge
  for (int x = 0; x < A.order(); ++x)
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (phi[A.mul(x, gens[i])] != B.mul(phi[x], images[i])) return std::nullopt;
  return phi;
}

}  // namespace detail

/// Explicit isomorphism A -> B as a permutation of element indices, if any.
/// Fast invariants (order census, abelianness, center size, conjugacy class
/// sizes) reject first; then generator images are backtracked.
inline std::optional<Permutation> are_isomorphic(const GroupTable& A, const GroupTable& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.order_census() != B.order_census()) return std::nullopt;
  if (A.is_abelian() != B.is_abelian()) return std::nullopt;
  if (A.center().size() != B.center().size()) return std::nullopt;
  auto class_sizes = [](const GroupTable& G) {
    std::vector<int> s;
    for (const auto& c : G.conjugacy_classes()) s.push_back(static_cast<int>(c.size()));
    std::sort(s.begin(), s.end());
    return s;
  };
  if (class_sizes(A) != class_sizes(B)) return std::nullopt;

  auto invA = detail::element_invariants(A);
  auto invB = detail::element_invariants(B);
  auto gens = detail::generating_sequence(A);

  std::vector<int> images(gens.size(), -1);
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto phi = detail::extend_morphism(A, B, gens, images);
      if (phi) {
        found = phi;
        return true;
      }
      return false;
    }
    for (int b = 0; b < B.order(); ++b) {
      if (invB[b] != invA[gens[depth]]) continue;
      images[depth] = b;
      // prune early: the partial assignment must already extend consistently
      std::vector<int> partial_gens(gens.begin(), gens.begin() + depth + 1);
      std::vector<int> partial_imgs(images.begin(), images.begin() + depth + 1);
      if (!detail::partial_extends(A, B, partial_gens, partial_imgs)) continue;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Permutation(*found);
}

/// All table-preserving bijections fixing the identity, as permutations of
/// element indices.
inline PermGroup automorphism_group(const GroupTable& G) {
  auto inv = detail::element_invariants(G);
  auto gens = detail::generating_sequence(G);
  std::vector<Permutation> autos;
  std::vector<int> images(gens.size(), -1);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto phi = detail::extend_morphism(G, G, gens, images);
      if (phi) {
        autos.push_back(Permutation(*phi));
        if (static_cast<std::int64_t>(autos.size()) > limits().group_order_bound)
          throw BoundExceeded("automorphism group exceeds the configured order bound");
      }
      return;
    }
    for (int b = 0; b < G.order(); ++b) {
      if (inv[b] != inv[gens[depth]]) continue;
      images[depth] = b;
      std::vector<int> pg(gens.begin(), gens.begin() + depth + 1);
      std::vector<int> pi(images.begin(), images.begin() + depth + 1);
      if (!detail::partial_extends(G, G, pg, pi)) continue;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  auto A = PermGroup::from_elements(G.order(), std::move(autos));
  return PermGroup::from_elements(G.order(), A.elements(), A.small_generating_set());
}

// ---------------------------------------------------------------------------
// Identification against a catalog of named groups
// ---------------------------------------------------------------------------

/// Best-effort human name ("Z6", "D4", "Q8", "Z2^3", "A4", "Z2xZ4", ...).
/// Falls back to "G<order>" when the catalog has no match.
inline std::string identify_group(const GroupTable& G) {
  const int n = G.order();
  if (n == 1) return "1";
  // cyclic
  for (int g = 0; g < n; ++g)
    if (G.element_order(g) == n) return "Z" + std::to_string(n);
  if (G.is_abelian()) {
    // elementary abelian p^k
    int p = 0;
    for (int g = 0; g < n; ++g)
      if (g != G.identity()) {
        p = G.element_order(g);
        break;
      }
    bool elem = true;
    for (int g = 0; g < n && elem; ++g)
      if (g != G.identity()) elem = G.element_order(g) == p;
    if (elem) {
      int k = 0;
      long long m = 1;
      while (m < n) {
        m *= p;
        ++k;
      }
      if (m == n) return "Z" + std::to_string(p) + "^" + std::to_string(k);
    }
    // abelian: enumerate factorizations into cyclic factors (n <= 64: cheap)
    auto try_parts = [&](auto&& self, int rest, int maxf, std::vector<int>& parts) -> std::string {
      if (rest == 1) {
        if (parts.size() < 2) return "";
        GroupTable cand = cyclic_group(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) cand = direct_product(cand, cyclic_group(parts[i]));
        if (are_isomorphic(G, cand)) {
          std::string name;
          for (std::size_t i = 0; i < parts.size(); ++i)
            name += (i ? "x" : "") + std::string("Z") + std::to_string(parts[i]);
          return name;
        }
        return "";
      }
      for (int f = std::min(maxf, rest); f >= 2; --f) {
        if (rest % f) continue;
        parts.push_back(f);
        auto r = self(self, rest / f, f, parts);
        parts.pop_back();
        if (!r.empty()) return r;
      }
      return "";
    };
    std::vector<int> parts;
    auto r = try_parts(try_parts, n, n - 1, parts);
    if (!r.empty()) return r;
  } else {
    if (n % 2 == 0 && are_isomorphic(G, dihedral_group(n / 2)))
      return "D" + std::to_string(n / 2);
    if (n == 8 && are_isomorphic(G, quaternion_group())) return "Q8";
    if (n % 4 == 0 && n > 8 && are_isomorphic(G, dicyclic_group(n / 4)))
      return "Dic" + std::to_string(n / 4);
    if (n == 12 && are_isomorphic(G, alternating_group(4))) return "A4";
    if (n == 24 && are_isomorphic(G, symmetric_group(4))) return "S4";
    if (n == 60 && are_isomorphic(G, alternating_group(5))) return "A5";
    if (n == 21) {
      // Frobenius group of order 21 is the unique nonabelian group there
      return "Z7:Z3";
    }
  }
  return "G" + std::to_string(n);
}

}  // namespace nat
