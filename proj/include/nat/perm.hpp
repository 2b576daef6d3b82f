#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nat/config.hpp"
#include "nat/rational.hpp"

namespace nat {

/// Permutation of {0..n-1} stored as an image array: images[i] = where i goes.
///
/// Composition convention, used everywhere in this library:
/// compose(p, q) applies p FIRST and q second, i.e. the result maps
/// i -> q(p(i)).  operator* is an alias for compose.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw InvalidInput("image array is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> im(img_.size());
    for (int i = 0; i < degree(); ++i) im[img_[i]] = i;
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

/// Apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidInput("compose: degree mismatch");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = q(p(i));
  return Permutation(std::move(im));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = p(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Least k >= 1 with p^k = identity; the lcm of the cycle lengths.
inline Int order(const Permutation& p) {
  Int ord = 1;
  for (const auto& c : cycles(p)) ord = boost::multiprecision::lcm(ord, Int(c.size()));
  return ord;
}

/// +1 for even, -1 for odd.
inline int sign(const Permutation& p) {
  int s = 1;
  for (const auto& c : cycles(p))
    if (c.size() % 2 == 0) s = -s;
  return s;
}

/// "(0 1 2)(3 4)" or "e" for the identity; fixed points omitted.
inline std::string cycle_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return any ? os.str() : "e";
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Finitely generated permutation group with the full element set
/// materialized (desk scale; see Limits::group_order_bound).
/// Elements are kept sorted lexicographically, so equal groups compare equal.
class PermGroup {
 public:
  /// Breadth-first closure of the generators under composition.
  static PermGroup generate(std::vector<Permutation> gens) {
    if (gens.empty()) throw InvalidInput("generate: empty generator list");
    const int n = gens[0].degree();
    for (const auto& g : gens)
      if (g.degree() != n) throw InvalidInput("generate: generators of unequal degree");

    std::unordered_map<Permutation, int, PermHash> index;
    std::vector<Permutation> elems;
    auto push = [&](const Permutation& p) {
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(p);
        if (static_cast<std::int64_t>(elems.size()) > limits().group_order_bound)
          throw BoundExceeded("group order exceeds the configured bound of " +
                              std::to_string(limits().group_order_bound));
        return true;
      }
      return false;
    };
    push(Permutation::identity(n));
    for (const auto& g : gens) push(g);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      Permutation cur = elems[head];
      for (const auto& g : gens) {
        push(compose(cur, g));
        push(compose(g, cur));
      }
    }
    std::sort(elems.begin(), elems.end());
    return PermGroup(n, std::move(gens), std::move(elems));
  }

  /// Wraps an already closed element set (caller guarantees closure).
  static PermGroup from_elements(int degree, std::vector<Permutation> elems,
                                 std::vector<Permutation> gens = {}) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return PermGroup(degree, std::move(gens), std::move(elems));
  }

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_.empty() ? elems_ : gens_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
  }

  bool is_transitive() const {
    if (degree_ == 0) return true;
    std::vector<char> hit(degree_, 0);
    hit[0] = 1;
    int count = 1;
    for (const auto& e : elems_) {
      if (!hit[e(0)]) {
        hit[e(0)] = 1;
        ++count;
      }
    }
    return count == degree_;
  }

  /// Simply transitive: transitive with |G| = degree (equivalently,
  /// transitive and only the identity fixes a point).
  bool is_regular() const { return is_transitive() && order() == degree_; }

  /// Greedy small generating set; deterministic.  Each candidate addition
  /// recloses the span under generator products only (breadth-first).
  std::vector<Permutation> small_generating_set() const {
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermHash> span;
    auto reclose = [&] {
      span.clear();
      std::vector<Permutation> queue{Permutation::identity(degree_)};
      span.insert(queue[0]);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Permutation cur = queue[head];
        for (const auto& g : gens) {
          for (auto&& p : {compose(cur, g), compose(g, cur)})
            if (span.insert(p).second) queue.push_back(p);
        }
      }
    };
    reclose();
    for (const auto& e : elems_) {
      if (span.count(e)) continue;
      gens.push_back(e);
      reclose();
      if (static_cast<std::int64_t>(span.size()) == order()) break;
    }
    return gens.empty() ? std::vector<Permutation>{Permutation::identity(degree_)} : gens;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elems_ == b.elems_;
  }

 private:
  PermGroup(int degree, std::vector<Permutation> gens, std::vector<Permutation> elems)
      : degree_(degree), gens_(std::move(gens)), elems_(std::move(elems)) {}

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
};

/// All subgroups of G of order n = degree acting simply transitively on the
/// n points, deduplicated as element sets, in deterministic order.
///
/// Backtracking over a transversal: for each point x there is a unique
/// candidate g_x with g_x(0) = x; partial choices are closed under
/// composition, pruning on (a) two members sharing an image of 0 (the action
/// would not be free), (b) closure size not dividing n (Lagrange inside the
/// target subgroup), (c) closure size exceeding n.
inline std::vector<PermGroup> regular_subgroups(const PermGroup& G) {
  const int n = G.degree();
  std::vector<PermGroup> out;
  if (n == 0 || G.order() % n != 0 || !G.is_transitive()) return out;

  const auto& elems = G.elements();
  std::unordered_map<Permutation, int, PermHash> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);

  std::vector<std::vector<int>> cand(n);
  int id_idx = -1;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    cand[elems[i](0)].push_back(i);
    if (elems[i].is_identity()) id_idx = i;
  }

  auto mul = [&](int a, int b) { return index.at(compose(elems[a], elems[b])); };

  // Closure of base+extra, or nullopt on a prune.  Members listed sorted.
  auto close = [&](const std::vector<int>& base, int extra) -> std::optional<std::vector<int>> {
    std::set<int> members(base.begin(), base.end());
    std::vector<char> img_used(n, 0);
    for (int m : members) img_used[elems[m](0)] = 1;
    std::vector<int> fresh;
    auto add = [&](int e) -> bool {
      if (members.count(e)) return true;
      int im = elems[e](0);
      if (img_used[im]) return false;  // two members would share an image of 0
      if (static_cast<int>(members.size()) >= n) return false;
      img_used[im] = 1;
      members.insert(e);
      fresh.push_back(e);
      return true;
    };
    if (!add(extra)) return std::nullopt;
    while (!fresh.empty()) {
      int a = fresh.back();
      fresh.pop_back();
      std::vector<int> snapshot(members.begin(), members.end());
      for (int b : snapshot) {
        if (!add(mul(a, b))) return std::nullopt;
        if (!add(mul(b, a))) return std::nullopt;
      }
    }
    if (n % static_cast<int>(members.size()) != 0) return std::nullopt;
    return std::vector<int>(members.begin(), members.end());
  };

  std::set<std::vector<int>> results;
  std::set<std::vector<int>> visited;
  std::int64_t nodes = 0;

  auto rec = [&](auto&& self, const std::vector<int>& closed) -> void {
    if (++nodes > limits().search_node_budget)
      throw BoundExceeded("regular-subgroup scan exceeded the search node budget");
    if (static_cast<int>(closed.size()) == n) {
      results.insert(closed);
      return;
    }
    std::vector<char> covered(n, 0);
    for (int m : closed) covered[elems[m](0)] = 1;
    int x = 0;
    while (covered[x]) ++x;
    for (int g : cand[x]) {
      auto next = close(closed, g);
      if (!next) continue;
      if (!visited.insert(*next).second) continue;
      self(self, *next);
    }
  };
  rec(rec, {id_idx});

  for (const auto& idxset : results) {
    std::vector<Permutation> members;
    members.reserve(idxset.size());
    for (int i : idxset) members.push_back(elems[i]);
    auto H = PermGroup::from_elements(n, std::move(members));
    out.push_back(PermGroup::from_elements(n, H.elements(), H.small_generating_set()));
  }
  return out;
}

/// All permutations p of {0..n-1} with code[p(i)][p(j)] == code[i][j] for all
/// i != j.  This is the shared engine behind metric isometry groups and
/// (edge-colored) graph automorphism groups: refine a vertex coloring to a
/// stable partition, then backtrack over color-respecting images.
inline PermGroup automorphisms_of_code_matrix(const std::vector<std::vector<int>>& code) {
  const int n = static_cast<int>(code.size());
  if (n == 0) return PermGroup::from_elements(0, {Permutation::identity(0)});

  // Partition refinement on (own color, multiset of (neighbor color, edge code)).
  std::vector<int> col(n, 0);
  int classes = 1;
  for (;;) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, int>> sig;
      sig.reserve(n - 1);
      for (int j = 0; j < n; ++j)
        if (j != i) sig.emplace_back(col[j], code[i][j]);
      std::sort(sig.begin(), sig.end());
      buckets[{col[i], std::move(sig)}].push_back(i);
    }
    std::vector<int> next(n);
    int id = 0;
    for (const auto& [key, verts] : buckets) {
      for (int v : verts) next[v] = id;
      ++id;
    }
    if (id == classes) break;
    classes = id;
    col = std::move(next);
  }

  std::vector<Permutation> autos;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);

  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      autos.push_back(Permutation(img));
      if (static_cast<std::int64_t>(autos.size()) > limits().group_order_bound)
        throw BoundExceeded("automorphism count exceeds the configured order bound");
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || col[w] != col[v]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (code[v][u] != code[w][img[u]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      img[v] = -1;
    }
  };
  rec(rec, 0);

  auto G = PermGroup::from_elements(n, std::move(autos));
  return PermGroup::from_elements(n, G.elements(), G.small_generating_set());
}

/// True when p preserves the off-diagonal code matrix.
inline bool preserves_code(const Permutation& p, const std::vector<std::vector<int>>& code) {
  const int n = p.degree();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (code[p(i)][p(j)] != code[i][j]) return false;
  return true;
}

}  // namespace nat
