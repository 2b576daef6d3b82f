#pragma once

// Independent brute-force oracle for the naturalness engine, kept free of
// the engine's machinery on purpose: isometries are found by filtering all
// n! permutations against the exact distance matrix, multiplication tables
// are assembled row by row (row x must be an isometry sending 0 to x, row 0
// the identity) with column pruning, and associativity / inverses / the
// strict conditions are checked directly on the finished table.  Usable up
// to n = 8.

#include <algorithm>
#include <optional>
#include <vector>

#include "nat/group.hpp"
#include "nat/metric.hpp"
#include "nat/perm.hpp"

namespace oracle {

inline std::vector<nat::Permutation> all_isometries(const nat::MetricSpace& M) {
  const int n = M.points();
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  std::vector<nat::Permutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = M.dist(im[i], im[j]) == M.dist(i, j);
    if (ok) out.push_back(nat::Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// All multiplication tables on {0..n-1} with identity 0 whose left
/// translations preserve the metric; strict mode also demands isometric
/// right translations and inversion.  Returns one representative table per
/// isomorphism class.
inline std::vector<nat::GroupTable> structures(const nat::MetricSpace& M,
                                               nat::CompatibilityMode mode) {
  const int n = M.points();
  auto isos = all_isometries(M);
  std::vector<std::vector<const nat::Permutation*>> cand(n);
  for (const auto& p : isos) cand[p(0)].push_back(&p);

  auto is_isometry = [&](const std::vector<int>& im) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (M.dist(im[i], im[j]) != M.dist(i, j)) return false;
    return true;
  };

  std::vector<std::vector<int>> rows;
  rows.push_back(nat::Permutation::identity(n).images());
  std::vector<nat::GroupTable> reps;

  auto consider = [&](const std::vector<std::vector<int>>& t) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) return;
    for (int a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < n; ++b)
        if (t[a][b] == 0 && t[b][a] == 0) has_inverse = true;
      if (!has_inverse) return;
    }
    if (mode == nat::CompatibilityMode::Strict) {
      std::vector<int> inv(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (t[a][b] == 0 && t[b][a] == 0) inv[a] = b;
      if (!is_isometry(inv)) return;
      for (int h = 0; h < n; ++h) {
        std::vector<int> col(n);
        for (int x = 0; x < n; ++x) col[x] = t[x][h];
        if (!is_isometry(col)) return;
      }
    }
    nat::GroupTable table(t);
    for (const auto& r : reps)
      if (nat::are_isomorphic(r, table)) return;
    reps.push_back(table);
  };

  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      consider(rows);
      return;
    }
    for (const auto* p : cand[x]) {
      rows.push_back(p->images());
      bool cols_ok = true;
      for (int y = 1; y < n && cols_ok; ++y) {
        // column y must stay injective
        for (std::size_t r1 = 0; r1 < rows.size() && cols_ok; ++r1)
          if (rows[r1][y] == rows.back()[y] && r1 + 1 != rows.size()) cols_ok = false;
      }
      if (cols_ok) self(self, x + 1);
      rows.pop_back();
    }
  };
  rec(rec, 1);
  return reps;
}

/// The engine's classes and the oracle's classes agree as sets of
/// isomorphism types.
inline bool matches(const nat::NaturalnessVerdict& verdict,
                    const std::vector<nat::GroupTable>& reps) {
  if (verdict.classes.size() != reps.size()) return false;
  std::vector<bool> used(reps.size(), false);
  for (const auto& c : verdict.classes) {
    bool found = false;
    for (std::size_t i = 0; i < reps.size() && !found; ++i) {
      if (used[i]) continue;
      if (nat::are_isomorphic(c.table, reps[i])) {
        used[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
