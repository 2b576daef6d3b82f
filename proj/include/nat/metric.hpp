#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nat/config.hpp"
#include "nat/group.hpp"
#include "nat/perm.hpp"
#include "nat/rational.hpp"

namespace nat {

/// Finite metric space with exact rational distances.  Symmetry, vanishing
/// diagonal, positivity and the triangle inequality are all checked exactly
/// on construction.
class MetricSpace {
 public:
  explicit MetricSpace(std::vector<std::vector<Rat>> dist, std::vector<std::string> labels = {})
      : n_(static_cast<int>(dist.size())), d_(std::move(dist)), labels_(std::move(labels)) {
    if (n_ == 0) throw InvalidInput("empty metric space");
    for (const auto& row : d_)
      if (static_cast<int>(row.size()) != n_) throw InvalidInput("distance matrix is not square");
    for (int i = 0; i < n_; ++i) {
      if (d_[i][i] != Rat(0)) throw InvalidInput("nonzero diagonal distance");
      for (int j = 0; j < n_; ++j) {
        if (d_[i][j] != d_[j][i]) throw InvalidInput("distance matrix is not symmetric");
        if (i != j && d_[i][j] <= Rat(0)) throw InvalidInput("non-positive distance");
      }
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n_; ++k)
          if (k != i && k != j && d_[i][j] + d_[j][k] < d_[i][k])
            throw InvalidInput("triangle inequality fails");
      }
    if (labels_.empty()) {
      labels_.resize(n_);
      for (int i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
    }
    if (static_cast<int>(labels_.size()) != n_) throw InvalidInput("label count mismatch");
    build_code();
  }

  int points() const { return n_; }
  const Rat& dist(int i, int j) const { return d_[i][j]; }
  const std::vector<std::vector<Rat>>& matrix() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Off-diagonal distances mapped to dense integer ids (sorted by value);
  /// diagonal entries carry -1.  All symmetry search runs on this matrix.
  const std::vector<std::vector<int>>& code() const { return code_; }

  /// Sorted distinct distance values.
  std::vector<Rat> distance_values() const { return values_; }

  Rat diameter() const {
    Rat m(0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m = std::max(m, d_[i][j]);
    return m;
  }

  /// The same space with points renamed by sigma: d'(sigma(i), sigma(j)) = d(i, j).
  MetricSpace relabeled(const Permutation& sigma) const {
    if (sigma.degree() != n_) throw InvalidInput("relabeling degree mismatch");
    std::vector<std::vector<Rat>> d(n_, std::vector<Rat>(n_));
    std::vector<std::string> lab(n_);
    for (int i = 0; i < n_; ++i) {
      lab[sigma(i)] = labels_[i];
      for (int j = 0; j < n_; ++j) d[sigma(i)][sigma(j)] = d_[i][j];
    }
    return MetricSpace(std::move(d), std::move(lab));
  }

 private:
  void build_code() {
    std::map<Rat, int> id;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) id.emplace(d_[i][j], 0);
    values_.clear();
    int next = 0;
    for (auto& [v, slot] : id) {
      slot = next++;
      values_.push_back(v);
    }
    code_.assign(n_, std::vector<int>(n_, -1));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) code_[i][j] = id.at(d_[i][j]);
  }

  int n_;
  std::vector<std::vector<Rat>> d_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> code_;
  std::vector<Rat> values_;
};

/// All distance-preserving permutations, fully enumerated.
inline PermGroup isometry_group(const MetricSpace& M) {
  if (M.points() > limits().point_bound)
    throw BoundExceeded("metric space has " + std::to_string(M.points()) +
                        " points, beyond the configured bound of " +
                        std::to_string(limits().point_bound));
  return automorphisms_of_code_matrix(M.code());
}

/// Which conditions a competitor group structure must satisfy.
///   Strict: left translations, right translations and inversion must all be
///           isometries (the literal definition).
///   Weak:   a simply transitive isometric action suffices.
enum class CompatibilityMode { Strict, Weak };

inline std::string to_string(CompatibilityMode m) {
  return m == CompatibilityMode::Strict ? "strict" : "weak";
}

/// One isomorphism class of compatible group structures, with the witness
/// that produced it: a regular subgroup of the isometry group and the
/// basepoint used to read off the multiplication table.
struct StructureClass {
  GroupTable table;
  std::string label;
  std::vector<std::pair<int, int>> census;
  std::vector<Permutation> witness_generators;
  int basepoint = 0;
};

struct PretestTrace {
  std::int64_t isometry_order = 0;
  bool transitive = false;
  bool order_divisible = false;
  bool subgroup_scan_ran = false;
};

/// natural == true iff exactly one isomorphism class of compatible group
/// structures exists.  Zero classes is "no structure", also not natural.
struct NaturalnessVerdict {
  bool natural = false;
  CompatibilityMode mode = CompatibilityMode::Strict;
  std::vector<StructureClass> classes;
  PretestTrace pretests;
};

namespace detail {

/// Multiplication table read off a simply transitive isometric action:
/// x*y := g_x(y), where g_x is the unique member with g_x(0) = x.
inline GroupTable table_from_regular_action(const PermGroup& H,
                                             const std::vector<std::string>& labels) {
  const int n = H.degree();
  std::vector<const Permutation*> gx(n, nullptr);
  for (const auto& e : H.elements()) gx[e(0)] = &e;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (*gx[x])(y);
  return GroupTable(std::move(t), labels);
}

inline std::vector<std::pair<int, int>> census_key(const GroupTable& g) { return g.order_census(); }

}  // namespace detail

/// The decision pipeline.
///  1. pretests: Isom(M) transitive and n | |Isom(M)| (Lagrange), else the
///     no-structure verdict;
///  2. enumerate regular subgroups H of Isom(M);
///  3. per H read the table x*y = g_x(y) at basepoint 0 (transitivity makes
///     the basepoint choice immaterial; covered by the relabeling tests);
///  4. Strict mode discards H unless the induced inversion and every induced
///     right translation preserve the metric (left translations are members
///     of H, hence isometries already);
///  5. partition survivors into isomorphism classes, one representative each.
inline NaturalnessVerdict compatible_structures(const MetricSpace& M, CompatibilityMode mode) {
  NaturalnessVerdict v;
  v.mode = mode;
  const int n = M.points();
  PermGroup isom = isometry_group(M);
  v.pretests.isometry_order = isom.order();
  v.pretests.transitive = isom.is_transitive();
  v.pretests.order_divisible = isom.order() % n == 0;
  if (!v.pretests.transitive || !v.pretests.order_divisible) return v;
  v.pretests.subgroup_scan_ran = true;

  std::vector<StructureClass> survivors;
  for (const auto& H : regular_subgroups(isom)) {
    GroupTable table = detail::table_from_regular_action(H, M.labels());
    if (mode == CompatibilityMode::Strict) {
      if (!preserves_code(table.inversion_map(), M.code())) continue;
      bool ok = true;
      for (int h = 0; h < n && ok; ++h) ok = preserves_code(table.right_translation(h), M.code());
      if (!ok) continue;
    }
    StructureClass sc{table, "", table.order_census(), H.small_generating_set(), 0};
    survivors.push_back(std::move(sc));
  }

  for (auto& s : survivors) {
    bool known = false;
    for (const auto& c : v.classes)
      if (are_isomorphic(c.table, s.table)) {
        known = true;
        break;
      }
    if (!known) {
      s.label = identify_group(s.table);
      v.classes.push_back(std::move(s));
    }
  }
  std::sort(v.classes.begin(), v.classes.end(), [](const StructureClass& a, const StructureClass& b) {
    if (a.census != b.census) return a.census < b.census;
    return a.table.table() < b.table.table();
  });
  v.natural = v.classes.size() == 1;
  return v;
}

/// d(x,y) = l(x^{-1} y) where l assigns 1 + i/(k+1) to the i-th inverse-closed
/// conjugacy class of non-identity elements (classes ordered by least member).
/// All values lie in (1,2), so the triangle inequality holds automatically,
/// and l is conjugation- and inversion-invariant, which makes left and right
/// translations and the inversion of G isometries by construction.
inline MetricSpace generic_biinvariant_metric(const GroupTable& G) {
  auto classes = G.inverse_closed_classes();
  std::vector<Rat> ell(G.order());
  int k = static_cast<int>(classes.size()) - 1;  // non-identity classes
  int i = 0;
  for (const auto& cls : classes) {
    if (cls.front() == G.identity() && cls.size() == 1) continue;
    ++i;
    for (int g : cls) ell[g] = Rat(1) + Rat(Int(i), Int(k + 1));
  }
  const int n = G.order();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) d[x][y] = ell[G.mul(G.inv(x), y)];
  return MetricSpace(std::move(d), G.labels());
}

/// Decide naturalness of G through its generic bi-invariant metric.
///
/// Every G-compatible metric has the form d(x,y) = l(x^{-1}y) with l constant
/// on inverse-closed conjugacy classes, so the generic metric (l injective on
/// those classes) has the minimal isometry group and hence the minimal
/// competitor set among all G-compatible metrics: G is natural iff the
/// generic metric is natural.  The verdict must contain G's own class.
inline NaturalnessVerdict is_natural_group(const GroupTable& G, CompatibilityMode mode) {
  auto verdict = compatible_structures(generic_biinvariant_metric(G), mode);
  bool found = false;
  for (const auto& c : verdict.classes)
    if (are_isomorphic(c.table, G)) {
      found = true;
      break;
    }
  if (!found)
    throw Error("internal error: the input group is missing from its own compatibility verdict");
  return verdict;
}

enum class MetricProductForm { Sum, Max };

/// Product metric on the Cartesian point set, pairs indexed i1 * n2 + i2.
/// Sum: d = d1 + scale * d2; Max: d = max(d1, scale * d2).
inline MetricSpace product_metric(const MetricSpace& M1, const MetricSpace& M2,
                                  MetricProductForm form, const Rat& scale) {
  if (scale <= Rat(0)) throw InvalidInput("product metric scale must be positive");
  const int n1 = M1.points(), n2 = M2.points(), n = n1 * n2;
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  std::vector<std::string> lab(n);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) lab[a * n2 + b] = M1.labels()[a] + "|" + M2.labels()[b];
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < n1; ++c)
        for (int e = 0; e < n2; ++e) {
          Rat d2 = scale * M2.dist(b, e);
          d[a * n2 + b][c * n2 + e] =
              form == MetricProductForm::Sum ? M1.dist(a, c) + d2 : std::max(M1.dist(a, c), d2);
        }
  return MetricSpace(std::move(d), std::move(lab));
}

/// Sum form with the separating default scale 1 + diameter(M1).
inline MetricSpace product_metric(const MetricSpace& M1, const MetricSpace& M2) {
  return product_metric(M1, M2, MetricProductForm::Sum, Rat(1) + M1.diameter());
}

}  // namespace nat
