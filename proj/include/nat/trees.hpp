#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nat/config.hpp"
#include "nat/perm.hpp"
#include "nat/rational.hpp"

namespace nat {

/// Automorphism of the depth-n rooted p-ary tree, realized as the flat
/// permutation of the p^n leaves (leaves indexed by base-p digit strings,
/// root digit most significant).  Respecting the tree structure means every
/// level induces a well-defined permutation; verified on construction.
class TreeAutomorphism {
 public:
  TreeAutomorphism(int arity, int depth, Permutation leaves)
      : arity_(arity), depth_(depth), leaves_(std::move(leaves)) {
    if (arity < 2) throw InvalidInput("tree arity must be >= 2");
    if (depth < 1) throw InvalidInput("tree depth must be >= 1");
    long long want = 1;
    for (int i = 0; i < depth; ++i) want *= arity;
    if (leaves_.degree() != want) throw InvalidInput("leaf permutation has wrong degree");
    for (int k = 1; k < depth_; ++k) {
      long long block = want;
      for (int i = 0; i < k; ++i) block /= arity;  // leaves per level-k vertex
      long long verts = want / block;
      for (long long v = 0; v < verts; ++v) {
        long long target = leaves_(static_cast<int>(v * block)) / block;
        for (long long off = 1; off < block; ++off)
          if (leaves_(static_cast<int>(v * block + off)) / block != target)
            throw InvalidInput("leaf permutation does not respect the tree levels");
      }
    }
  }

  int arity() const { return arity_; }
  int depth() const { return depth_; }
  const Permutation& leaf_permutation() const { return leaves_; }
  long long leaves() const { return leaves_.degree(); }

  /// Induced permutation on the p^k vertices of level k.
  Permutation sphere_action(int k) const {
    if (k < 0 || k > depth_) throw InvalidInput("sphere level out of range");
    long long block = leaves();
    for (int i = 0; i < k; ++i) block /= arity_;
    long long verts = leaves() / block;
    std::vector<int> im(verts);
    for (long long v = 0; v < verts; ++v)
      im[v] = static_cast<int>(leaves_(static_cast<int>(v * block)) / block);
    return Permutation(std::move(im));
  }

  friend bool operator==(const TreeAutomorphism& a, const TreeAutomorphism& b) {
    return a.arity_ == b.arity_ && a.leaves_ == b.leaves_;
  }

  TreeAutomorphism then(const TreeAutomorphism& other) const {
    if (arity_ != other.arity_ || depth_ != other.depth_)
      throw InvalidInput("tree automorphism shape mismatch");
    return TreeAutomorphism(arity_, depth_, compose(leaves_, other.leaves_));
  }

  TreeAutomorphism inverse() const { return TreeAutomorphism(arity_, depth_, leaves_.inverse()); }

 private:
  int arity_;
  int depth_;
  Permutation leaves_;
};

enum class TreeFamily { Odometer, DyadicDihedral, TernarySTUJ, Grigorchuk, GuptaSidki };

namespace detail {

using Img = std::vector<int>;

inline Img tree_identity(long long n) {
  Img im(n);
  for (long long i = 0; i < n; ++i) im[i] = static_cast<int>(i);
  return im;
}

/// The adding-machine recursion on the p-ary tree: children shift down one
/// slot and the recursion re-enters through the wrapped-around branch
/// (binary case: T{X,Y} = {Y, T[X]}).
inline Img odometer_img(int p, int depth) {
  if (depth == 0) return {0};
  Img sub = odometer_img(p, depth - 1);
  long long m = sub.size(), n = m * p;
  Img im(n);
  for (int c = 0; c < p; ++c)
    for (long long r = 0; r < m; ++r) {
      if (c >= 1)
        im[c * m + r] = static_cast<int>((c - 1) * m + r);
      else
        im[r] = static_cast<int>((p - 1) * m + sub[r]);
    }
  return im;
}

// dyadic dihedral family: A{X,Y}={Y,X}; B{X,Y}={V[Y],U[X]};
// U{X,Y}={Y,U[X]}; V{X,Y}={V[Y],X}.
inline Img dyadic_img(char sym, int depth) {
  if (depth == 0) return {0};
  long long m = 1;
  for (int i = 0; i < depth - 1; ++i) m *= 2;
  Img im(2 * m);
  auto sub = [&](char s) { return dyadic_img(s, depth - 1); };
  switch (sym) {
    case 'A':
      for (long long r = 0; r < m; ++r) {
        im[r] = static_cast<int>(m + r);
        im[m + r] = static_cast<int>(r);
      }
      break;
    case 'U': {  // 0w -> 1 U(w), 1w -> 0w
      Img u = sub('U');
      for (long long r = 0; r < m; ++r) {
        im[r] = static_cast<int>(m + u[r]);
        im[m + r] = static_cast<int>(r);
      }
      break;
    }
    case 'V': {  // 0w -> 1w, 1w -> 0 V(w)
      Img v = sub('V');
      for (long long r = 0; r < m; ++r) {
        im[r] = static_cast<int>(m + r);
        im[m + r] = static_cast<int>(v[r]);
      }
      break;
    }
    case 'B': {  // 0w -> 1 U(w), 1w -> 0 V(w)
      Img u = sub('U'), v = sub('V');
      for (long long r = 0; r < m; ++r) {
        im[r] = static_cast<int>(m + u[r]);
        im[m + r] = static_cast<int>(v[r]);
      }
      break;
    }
    default:
      throw InvalidInput("dyadic dihedral symbols are A, B, U, V");
  }
  return im;
}

// ternary family from the listing:
// T{a,b,c}={T[b],c,a}; S{a,b,c}={b,S[c],a}; U{a,b,c}={b,c,U[a]};
// J{a,b,c}={J[b],J[c],J[a]}; K = J^{-1}: K{a,b,c}={K[c],K[a],K[b]}.
inline Img ternary_img(char sym, int depth) {
  if (depth == 0) return {0};
  long long m = 1;
  for (int i = 0; i < depth - 1; ++i) m *= 3;
  Img im(3 * m);
  auto place = [&](int from_branch, int to_branch, const Img* rec) {
    for (long long r = 0; r < m; ++r)
      im[from_branch * m + r] =
          static_cast<int>(to_branch * m + (rec ? (*rec)[r] : static_cast<int>(r)));
  };
  switch (sym) {
    case 'T': {
      Img t = ternary_img('T', depth - 1);
      place(1, 0, &t);  // old b -> slot 0 with T applied
      place(2, 1, nullptr);
      place(0, 2, nullptr);
      break;
    }
    case 'S': {
      Img s = ternary_img('S', depth - 1);
      place(1, 0, nullptr);
      place(2, 1, &s);
      place(0, 2, nullptr);
      break;
    }
    case 'U': {
      Img u = ternary_img('U', depth - 1);
      place(1, 0, nullptr);
      place(2, 1, nullptr);
      place(0, 2, &u);
      break;
    }
    case 'J': {
      Img j = ternary_img('J', depth - 1);
      place(1, 0, &j);
      place(2, 1, &j);
      place(0, 2, &j);
      break;
    }
    case 'K': {
      Img k = ternary_img('K', depth - 1);
      place(2, 0, &k);
      place(0, 1, &k);
      place(1, 2, &k);
      break;
    }
    default:
      throw InvalidInput("ternary symbols are T, S, U, J, K");
  }
  return im;
}

// Grigorchuk generators: a flips the top; b = (a, c), c = (a, d), d = (1, b).
inline Img grigorchuk_img(char sym, int depth) {
  if (depth == 0) return {0};
  long long m = 1;
  for (int i = 0; i < depth - 1; ++i) m *= 2;
  Img im(2 * m);
  auto left = [&](const Img* rec) {
    for (long long r = 0; r < m; ++r)
      im[r] = static_cast<int>(rec ? (*rec)[r] : static_cast<int>(r));
  };
  auto right = [&](const Img* rec) {
    for (long long r = 0; r < m; ++r)
      im[m + r] = static_cast<int>(m + (rec ? (*rec)[r] : static_cast<int>(r)));
  };
  switch (sym) {
    case 'a':
      for (long long r = 0; r < m; ++r) {
        im[r] = static_cast<int>(m + r);
        im[m + r] = static_cast<int>(r);
      }
      break;
    case 'b': {
      Img x = grigorchuk_img('a', depth - 1), y = grigorchuk_img('c', depth - 1);
      left(&x);
      right(&y);
      break;
    }
    case 'c': {
      Img x = grigorchuk_img('a', depth - 1), y = grigorchuk_img('d', depth - 1);
      left(&x);
      right(&y);
      break;
    }
    case 'd': {
      Img y = grigorchuk_img('b', depth - 1);
      left(nullptr);
      right(&y);
      break;
    }
    default:
      throw InvalidInput("Grigorchuk symbols are a, b, c, d");
  }
  return im;
}

// Gupta-Sidki: a rotates the three branches; b = (a, a^{-1}, b).
inline Img gupta_sidki_img(char sym, int depth) {
  if (depth == 0) return {0};
  long long m = 1;
  for (int i = 0; i < depth - 1; ++i) m *= 3;
  Img im(3 * m);
  switch (sym) {
    case 'a':
      for (int c = 0; c < 3; ++c)
        for (long long r = 0; r < m; ++r) im[c * m + r] = static_cast<int>(((c + 1) % 3) * m + r);
      break;
    case 'b': {
      Img a = gupta_sidki_img('a', depth - 1);
      Img a2(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) a2[i] = a[a[i]];
      Img b = gupta_sidki_img('b', depth - 1);
      for (long long r = 0; r < m; ++r) {
        im[r] = a[r];
        im[m + r] = static_cast<int>(m + a2[r]);
        im[2 * m + r] = static_cast<int>(2 * m + b[r]);
      }
      break;
    }
    default:
      throw InvalidInput("Gupta-Sidki symbols are a, b");
  }
  return im;
}

}  // namespace detail

/// Generator `symbol` of the family, unrolled to the depth-n leaf permutation.
/// `arity` is only consulted by the Odometer family (p-ary adding machine).
inline TreeAutomorphism tree_generator(TreeFamily family, char symbol, int depth, int arity = 2) {
  switch (family) {
    case TreeFamily::Odometer:
      if (symbol != 'T') throw InvalidInput("odometer has the single symbol T");
      return TreeAutomorphism(arity, depth, Permutation(detail::odometer_img(arity, depth)));
    case TreeFamily::DyadicDihedral:
      return TreeAutomorphism(2, depth, Permutation(detail::dyadic_img(symbol, depth)));
    case TreeFamily::TernarySTUJ:
      return TreeAutomorphism(3, depth, Permutation(detail::ternary_img(symbol, depth)));
    case TreeFamily::Grigorchuk:
      return TreeAutomorphism(2, depth, Permutation(detail::grigorchuk_img(symbol, depth)));
    case TreeFamily::GuptaSidki:
      return TreeAutomorphism(3, depth, Permutation(detail::gupta_sidki_img(symbol, depth)));
  }
  throw InvalidInput("unknown tree family");
}

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// Evaluates the family's defining relations as permutation identities at
/// the given depth.
inline std::vector<RelationCheck> verify_relations(TreeFamily family, int depth, int arity = 2) {
  std::vector<RelationCheck> out;
  auto id = [&](const TreeAutomorphism& t) { return t.leaf_permutation().is_identity(); };
  switch (family) {
    case TreeFamily::Odometer: {
      auto T = tree_generator(family, 'T', depth, arity);
      Int want = 1;
      for (int i = 0; i < depth; ++i) want *= arity;
      out.push_back({"order(T) = p^n", order(T.leaf_permutation()) == want});
      break;
    }
    case TreeFamily::DyadicDihedral: {
      auto A = tree_generator(family, 'A', depth);
      auto B = tree_generator(family, 'B', depth);
      auto U = tree_generator(family, 'U', depth);
      auto V = tree_generator(family, 'V', depth);
      out.push_back({"A^2 = 1", id(A.then(A))});
      out.push_back({"B^2 = 1", id(B.then(B))});
      out.push_back({"UV = 1", id(U.then(V))});
      out.push_back({"VU = 1", id(V.then(U))});
      // AB fixes each half and walks it as one full cycle (adds one)
      auto AB = B.then(A).leaf_permutation();
      long long half = AB.degree() / 2;
      bool halves = true;
      for (long long i = 0; i < AB.degree(); ++i)
        if ((AB(static_cast<int>(i)) < half) != (i < half)) halves = false;
      bool cyc = true;
      for (long long start : {0ll, half}) {
        std::set<int> orbit;
        int x = static_cast<int>(start);
        do {
          orbit.insert(x);
          x = AB(x);
        } while (x != start);
        if (static_cast<long long>(orbit.size()) != half) cyc = false;
      }
      out.push_back({"AB translates each half (full cycle per branch)", halves && cyc});
      break;
    }
    case TreeFamily::TernarySTUJ: {
      auto T = tree_generator(family, 'T', depth);
      auto S = tree_generator(family, 'S', depth);
      auto U = tree_generator(family, 'U', depth);
      auto J = tree_generator(family, 'J', depth);
      auto K = tree_generator(family, 'K', depth);
      out.push_back({"T(S(U)) = 1", id(U.then(S).then(T))});
      out.push_back({"J K = 1", id(J.then(K))});
      out.push_back({"J^{-1} S J = U", J.then(S).then(K) == U});
      out.push_back({"J^{-1} T J = S", J.then(T).then(K) == S});
      // the depth-1 quotient is abelian, so noncommutativity shows from depth 2 on
      if (depth >= 2) out.push_back({"ST != TS", !(T.then(S) == S.then(T))});
      break;
    }
    case TreeFamily::Grigorchuk: {
      auto a = tree_generator(family, 'a', depth);
      auto b = tree_generator(family, 'b', depth);
      auto c = tree_generator(family, 'c', depth);
      auto d = tree_generator(family, 'd', depth);
      out.push_back({"a^2 = 1", id(a.then(a))});
      out.push_back({"b^2 = 1", id(b.then(b))});
      out.push_back({"c^2 = 1", id(c.then(c))});
      out.push_back({"d^2 = 1", id(d.then(d))});
      out.push_back({"bcd = 1", id(b.then(c).then(d))});
      break;
    }
    case TreeFamily::GuptaSidki: {
      auto a = tree_generator(family, 'a', depth);
      auto b = tree_generator(family, 'b', depth);
      out.push_back({"a^3 = 1", id(a.then(a).then(a))});
      out.push_back({"b^3 = 1", id(b.then(b).then(b))});
      break;
    }
  }
  return out;
}

/// Ball sizes |B_0|..|B_r| in the word metric of the given generators,
/// by breadth-first word enumeration with permutation-equality dedup.
///
/// Caveat (surfaced by every report built on this): equality is tested in
/// the depth-n quotient, so the sizes are lower bounds for the infinite
/// group and exact only while the quotient is faithful on the ball.
inline constexpr const char* kBallGrowthCaveat =
    "sizes are computed in the finite-depth quotient: lower bounds for the "
    "infinite group, exact only while the quotient is faithful on the ball";

inline std::vector<std::int64_t> ball_growth(const std::vector<TreeAutomorphism>& generators,
                                             int radius) {
  if (generators.empty()) throw InvalidInput("ball growth needs at least one generator");
  const int deg = generators[0].leaf_permutation().degree();
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.leaf_permutation().degree() != deg)
      throw InvalidInput("generators act on different trees");
    gens.push_back(g.leaf_permutation());
    gens.push_back(g.leaf_permutation().inverse());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation::identity(deg)};
  seen.insert(frontier[0]);
  std::vector<std::int64_t> sizes{1};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Permutation> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Permutation v = compose(w, g);
        if (seen.insert(v).second) {
          next.push_back(v);
          if (static_cast<std::int64_t>(seen.size()) > limits().group_order_bound)
            throw BoundExceeded("ball growth exceeded the word bound");
        }
      }
    sizes.push_back(static_cast<std::int64_t>(seen.size()));
    frontier = std::move(next);
  }
  return sizes;
}

}  // namespace nat
