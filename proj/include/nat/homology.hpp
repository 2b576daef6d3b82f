#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nat/graph.hpp"
#include "nat/linalg.hpp"
#include "nat/perm.hpp"
#include "nat/rational.hpp"

namespace nat {

/// Oriented simplices of a clique (Whitney) complex with boundary matrices.
/// Orientation is fixed by strictly increasing vertex order;
/// boundary_[k] maps k-chains to (k-1)-chains with alternating signs.
class ChainComplex {
 public:
  explicit ChainComplex(std::vector<std::vector<int>> cliques) {
    for (auto& c : cliques) {
      int k = static_cast<int>(c.size()) - 1;
      if (k < 0) throw InvalidInput("empty simplex");
      if (!std::is_sorted(c.begin(), c.end())) throw InvalidInput("simplex vertices not sorted");
      while (static_cast<int>(simplices_.size()) <= k) simplices_.push_back({});
      simplices_[k].push_back(c);
    }
    if (simplices_.empty()) throw InvalidInput("empty complex");
    for (auto& level : simplices_) std::sort(level.begin(), level.end());
    // face closure
    for (int k = 1; k < dimension() + 1; ++k)
      for (const auto& s : simplices_[k])
        for (int drop = 0; drop <= k; ++drop) {
          std::vector<int> face;
          for (int i = 0; i <= k; ++i)
            if (i != drop) face.push_back(s[i]);
          if (!std::binary_search(simplices_[k - 1].begin(), simplices_[k - 1].end(), face))
            throw InvalidInput("complex is not closed under taking faces");
        }
    build_boundaries();
  }

  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<std::vector<int>>& simplices(int k) const { return simplices_[k]; }
  int count(int k) const {
    return k >= 0 && k <= dimension() ? static_cast<int>(simplices_[k].size()) : 0;
  }
  int total_simplices() const {
    int t = 0;
    for (int k = 0; k <= dimension(); ++k) t += count(k);
    return t;
  }

  std::vector<int> f_vector() const {
    std::vector<int> f;
    for (int k = 0; k <= dimension(); ++k) f.push_back(count(k));
    return f;
  }

  /// boundary(k) has count(k-1) rows and count(k) columns, entries in {-1,0,1}.
  const IntMat& boundary(int k) const { return boundary_[k]; }

  int index_of(int k, const std::vector<int>& simplex) const {
    auto& lvl = simplices_[k];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), simplex);
    if (it == lvl.end() || *it != simplex) return -1;
    return static_cast<int>(it - lvl.begin());
  }

  /// Hodge block L_k = d_k^T d_k + d_{k+1} d_{k+1}^T on k-forms.
  IntMat hodge_laplacian(int k) const {
    IntMat L = int_matrix(count(k), count(k));
    if (k >= 1) {
      const IntMat& d = boundary_[k];
      L = matadd(L, matmul(transpose(d), d));
    }
    if (k + 1 <= dimension()) {
      const IntMat& d = boundary_[k + 1];
      L = matadd(L, matmul(d, transpose(d)));
    }
    return L;
  }

 private:
  void build_boundaries() {
    boundary_.assign(dimension() + 1, {});
    boundary_[0] = int_matrix(0, count(0));
    for (int k = 1; k <= dimension(); ++k) {
      IntMat d = int_matrix(count(k - 1), count(k));
      for (int j = 0; j < count(k); ++j) {
        const auto& s = simplices_[k][j];
        int sign = 1;
        for (int drop = 0; drop <= k; ++drop, sign = -sign) {
          std::vector<int> face;
          for (int i = 0; i <= k; ++i)
            if (i != drop) face.push_back(s[i]);
          d[index_of(k - 1, face)][j] = sign;
        }
      }
      boundary_[k] = std::move(d);
    }
    for (int k = 2; k <= dimension(); ++k)
      if (!is_zero(matmul(boundary_[k - 1], boundary_[k])))
        throw Error("internal error: boundary of boundary is nonzero");
  }

  std::vector<std::vector<std::vector<int>>> simplices_;
  std::vector<IntMat> boundary_;
};

inline ChainComplex clique_complex(const WeightedGraph& g, int max_dim = -1) {
  return ChainComplex(all_cliques(g, max_dim));
}

/// b_k = dim ker L_k, by exact rank elimination.
inline std::vector<Int> betti(const ChainComplex& c) {
  std::vector<Int> b;
  for (int k = 0; k <= c.dimension(); ++k)
    b.push_back(Int(c.count(k)) - Int(rank(c.hodge_laplacian(k))));
  return b;
}

/// Alternating f-sum; cross-checked against the alternating Betti sum
/// (Euler-Poincare).
inline Int euler_characteristic(const ChainComplex& c) {
  Int chi = 0;
  int sign = 1;
  for (int k = 0; k <= c.dimension(); ++k, sign = -sign) chi += sign * c.count(k);
  Int chi_b = 0;
  sign = 1;
  for (const Int& b : betti(c)) {
    chi_b += sign * b;
    sign = -sign;
  }
  if (chi != chi_b) throw Error("internal error: Euler-Poincare identity fails");
  return chi;
}

/// Coefficients of f(t) = 1 + f_0 t + f_1 t^2 + ... + f_d t^{d+1},
/// lowest degree first.
inline std::vector<Int> f_function_coefficients(const ChainComplex& c) {
  std::vector<Int> coeff{1};
  for (int k = 0; k <= c.dimension(); ++k) coeff.push_back(Int(c.count(k)));
  return coeff;
}

/// Evaluates f at an integer point (handy for factored-form checks).
inline Int f_function_value(const ChainComplex& c, const Int& t) {
  Int acc = 0, pw = 1;
  for (const Int& co : f_function_coefficients(c)) {
    acc += co * pw;
    pw *= t;
  }
  return acc;
}

/// Curvature K(v) = sum_{m>=0} (-1)^m V_m(v) / (m+1), where V_m(v) counts the
/// m-simplices containing v (V_0 = 1 is the vertex itself).  The curvatures
/// sum to the Euler characteristic exactly (Gauss-Bonnet); that identity is
/// asserted here.
inline std::vector<Rat> gauss_bonnet_curvature(const ChainComplex& c) {
  std::vector<Rat> K(c.count(0), Rat(0));
  for (int k = 0; k <= c.dimension(); ++k) {
    Rat term = Rat(Int(k % 2 ? -1 : 1), Int(k + 1));
    for (const auto& s : c.simplices(k))
      for (int v : s) K[v] += term;
  }
  Rat sum(0);
  for (const auto& x : K) sum += x;
  if (sum != Rat(euler_characteristic(c))) throw Error("internal error: Gauss-Bonnet sum is off");
  return K;
}

/// True iff T maps every simplex of c to a simplex of c.
inline bool is_simplicial(const ChainComplex& c, const Permutation& T) {
  if (T.degree() != c.count(0)) return false;
  for (int k = 1; k <= c.dimension(); ++k)
    for (const auto& s : c.simplices(k)) {
      std::vector<int> im;
      for (int v : s) im.push_back(T(v));
      std::sort(im.begin(), im.end());
      if (c.index_of(k, im) < 0) return false;
    }
  return true;
}

namespace detail {

/// Signed permutation matrix of the chain map T# on k-chains:
/// column sigma maps to sign * column T(sigma), sign being the parity of the
/// sort that restores increasing vertex order.
inline IntMat chain_map_matrix(const ChainComplex& c, const Permutation& T, int k) {
  IntMat P = int_matrix(c.count(k), c.count(k));
  for (int j = 0; j < c.count(k); ++j) {
    const auto& s = c.simplices(k)[j];
    std::vector<int> im;
    for (int v : s) im.push_back(T(v));
    std::vector<int> sorted_im = im;
    std::sort(sorted_im.begin(), sorted_im.end());
    int idx = c.index_of(k, sorted_im);
    if (idx < 0) throw InvalidInput("permutation is not simplicial");
    // parity of im relative to sorted order
    int sgn = 1;
    for (std::size_t a = 0; a < im.size(); ++a)
      for (std::size_t b = a + 1; b < im.size(); ++b)
        if (im[a] > im[b]) sgn = -sgn;
    P[idx][j] = sgn;
  }
  return P;
}

/// Trace of the chain map restricted to ker L_k: solve B C = P B for C on a
/// kernel basis B and take tr(C).
inline Rat harmonic_trace(const ChainComplex& c, const Permutation& T, int k) {
  IntMat L = c.hodge_laplacian(k);
  RatMat B = kernel_basis(L);
  int nullity = B.empty() ? 0 : static_cast<int>(B[0].size());
  if (nullity == 0) return Rat(0);
  IntMat P = chain_map_matrix(c, T, k);
  RatMat PB(c.count(k), std::vector<Rat>(nullity, Rat(0)));
  for (int i = 0; i < c.count(k); ++i)
    for (int j = 0; j < c.count(k); ++j) {
      if (P[i][j] == 0) continue;
      for (int col = 0; col < nullity; ++col) PB[i][col] += Rat(P[i][j]) * B[j][col];
    }
  RatMat C = solve_full_column_rank(B, PB);
  Rat tr(0);
  for (int i = 0; i < nullity; ++i) tr += C[i][i];
  return tr;
}

}  // namespace detail

struct FixedSimplex {
  int dim = 0;
  std::vector<int> vertices;
  int index = 0;  // (-1)^dim * sign(T restricted to the simplex)
};

/// Lefschetz number computed two independent ways:
///   via_cohomology: super-trace of the induced map on the harmonic spaces
///     ker L_k (route through exact kernel bases);
///   via_fixed_points: sum over T-fixed simplices y of
///     (-1)^dim(y) * sign(T|y).
/// Both are returned; they must agree (fixed point theorem), which the
/// calling tests assert rather than this function forcing it.
struct LefschetzResult {
  Int via_cohomology = 0;
  Int via_fixed_points = 0;
  std::vector<FixedSimplex> fixed;
};

inline LefschetzResult lefschetz_number(const ChainComplex& c, const Permutation& T) {
  if (!is_simplicial(c, T)) throw InvalidInput("permutation is not simplicial");
  LefschetzResult r;
  Rat chom(0);
  int sign_k = 1;
  for (int k = 0; k <= c.dimension(); ++k, sign_k = -sign_k)
    chom += Rat(sign_k) * detail::harmonic_trace(c, T, k);
  if (chom.denominator() != 1) throw Error("internal error: non-integer Lefschetz trace");
  r.via_cohomology = chom.numerator();

  Int fp = 0;
  for (int k = 0; k <= c.dimension(); ++k) {
    for (const auto& s : c.simplices(k)) {
      std::vector<int> im;
      for (int v : s) im.push_back(T(v));
      std::vector<int> sorted_im = im;
      std::sort(sorted_im.begin(), sorted_im.end());
      if (sorted_im != s) continue;
      int sgn = 1;
      for (std::size_t a = 0; a < im.size(); ++a)
        for (std::size_t b = a + 1; b < im.size(); ++b)
          if (im[a] > im[b]) sgn = -sgn;
      int index = (k % 2 ? -1 : 1) * sgn;
      fp += index;
      r.fixed.push_back({k, s, index});
    }
  }
  r.via_fixed_points = fp;
  return r;
}

/// Per-element Lefschetz data for a group of automorphisms of g, plus the
/// total and average.  Nothing is asserted group-ward: the report records
/// whether the dual-route equality held element-wise (theorem_ok) and leaves
/// judgement of any total-value claims to the caller.
struct LefschetzAuditEntry {
  std::string label;
  Int lefschetz = 0;
  int fixed_simplices = 0;
  Int index_sum = 0;
};

struct LefschetzAudit {
  std::vector<LefschetzAuditEntry> elements;
  Int total = 0;
  Rat average;
  bool theorem_ok = true;
};

inline LefschetzAudit lefschetz_group_audit(const WeightedGraph& g, const PermGroup& group) {
  ChainComplex c = clique_complex(g);
  LefschetzAudit audit;
  for (const auto& t : group.elements()) {
    if (!is_simplicial(c, t)) throw InvalidInput("group member is not an automorphism of the complex");
    LefschetzResult r = lefschetz_number(c, t);
    if (r.via_cohomology != r.via_fixed_points) audit.theorem_ok = false;
    audit.elements.push_back(
        {cycle_string(t), r.via_cohomology, static_cast<int>(r.fixed.size()), r.via_fixed_points});
    audit.total += r.via_cohomology;
  }
  audit.average = Rat(audit.total, Int(group.order()));
  return audit;
}

}  // namespace nat
